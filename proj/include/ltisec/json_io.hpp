#pragma once

#include "ltisec/attack.hpp"

#include <json.hpp>

#include <map>
#include <string>

namespace ltisec {

using nlohmann::json;

// Exact rational from a JSON value: integers directly, strings through
// parse_rat ("p/q", decimals), floating numbers through their shortest
// round-trip decimal text.
Rat rat_from_json(const json& j);
json rat_to_json(const Rat& r);

Vec vec_from_json(const json& j);
json vec_to_json(const Vec& v);

Mat mat_from_json(const json& j);
json mat_to_json(const Mat& m);

json subspace_to_json(const Subspace& s);

StateSet state_set_from_json(const json& j);
json state_set_to_json(const StateSet& s);

// Self-describing model file: system matrices, optional attack channel
// (defaults to mirroring B and D), optional named state sets.
struct ParsedModel {
    LtiSystem system;
    AttackChannel channel;
    std::map<std::string, StateSet> sets;
};

ParsedModel parse_model_json(const json& j);
ParsedModel parse_model_file(const std::string& path);

// FNV-1a 64-bit content digest, hex encoded; used for report provenance.
std::string fnv1a64_hex(const std::string& data);

} // namespace ltisec
