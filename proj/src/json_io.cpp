#include "ltisec/json_io.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <limits>

namespace ltisec {

namespace {

Rat rat_from_decimal_text(std::string s) {
    // split off a scientific exponent if present
    int exp10 = 0;
    auto epos = s.find_first_of("eE");
    if (epos != std::string::npos) {
        exp10 = std::stoi(s.substr(epos + 1));
        s = s.substr(0, epos);
    }
    Rat base = parse_rat(s);
    Rat scale = 1;
    for (int i = 0; i < (exp10 < 0 ? -exp10 : exp10); ++i) scale *= 10;
    return exp10 >= 0 ? Rat(base * scale) : Rat(base / scale);
}

} // namespace

Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(Int(j.get<std::int64_t>()));
    if (j.is_number_unsigned()) return Rat(Int(j.get<std::uint64_t>()));
    if (j.is_string()) return parse_rat(j.get<std::string>());
    if (j.is_number_float()) {
        // shortest round-trip text recovers the intended decimal literal
        double d = j.get<double>();
        char buf[64];
        auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), d);
        if (ec != std::errc()) throw ParseError("unrepresentable float entry");
        return rat_from_decimal_text(std::string(buf, end));
    }
    throw ParseError("rational entry must be a number or string, got: " + j.dump());
}

json rat_to_json(const Rat& r) {
    if (denominator(r) == 1) {
        const Int& n = numerator(r);
        if (n >= std::numeric_limits<std::int64_t>::min() &&
            n <= std::numeric_limits<std::int64_t>::max())
            return json(static_cast<std::int64_t>(n));
    }
    return json(rat_to_string(r));
}

Vec vec_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("vector must be a JSON array");
    Vec v;
    for (const auto& e : j) v.push_back(rat_from_json(e));
    return v;
}

json vec_to_json(const Vec& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(rat_to_json(x));
    return out;
}

Mat mat_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("matrix must be a nonempty array of rows");
    std::vector<Vec> rows;
    for (const auto& r : j) rows.push_back(vec_from_json(r));
    for (const auto& r : rows)
        if (r.size() != rows.front().size()) throw ParseError("ragged matrix rows");
    return Mat::from_rows(rows);
}

json mat_to_json(const Mat& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vec_to_json(m.row(i)));
    return out;
}

json subspace_to_json(const Subspace& s) {
    json basis = json::array();
    for (std::size_t j = 0; j < s.dim(); ++j) basis.push_back(vec_to_json(s.basis().col(j)));
    return json{{"kind", "subspace"}, {"dim", s.ambient_dim()}, {"basis", basis}};
}

namespace {

Subspace subspace_from_fields(const json& j) {
    std::vector<Vec> basis;
    for (const auto& v : j.at("basis")) basis.push_back(vec_from_json(v));
    std::size_t dim;
    if (j.contains("dim"))
        dim = j.at("dim").get<std::size_t>();
    else if (!basis.empty())
        dim = basis.front().size();
    else
        throw ParseError("subspace with empty basis needs an explicit dim");
    return Subspace::span_of(basis, dim);
}

} // namespace

StateSet state_set_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind")) throw ParseError("state set needs a kind field");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "fullspace") return StateSet::full_space(j.at("dim").get<std::size_t>());
    if (kind == "finite") {
        std::vector<Vec> pts;
        for (const auto& p : j.at("points")) pts.push_back(vec_from_json(p));
        std::size_t dim = pts.empty() ? j.at("dim").get<std::size_t>() : pts.front().size();
        return StateSet::finite(std::move(pts), dim);
    }
    if (kind == "subspace") return StateSet::lin(subspace_from_fields(j));
    if (kind == "coset")
        return StateSet::coset(vec_from_json(j.at("offset")), subspace_from_fields(j));
    if (kind == "poly") {
        std::vector<Vec> verts;
        for (const auto& p : j.at("vertices")) verts.push_back(vec_from_json(p));
        if (verts.empty()) throw ParseError("poly needs at least one vertex");
        return StateSet::poly(std::move(verts), verts.front().size());
    }
    if (kind == "union") {
        std::vector<StateSet> members;
        for (const auto& m : j.at("members")) members.push_back(state_set_from_json(m));
        if (members.empty()) throw ParseError("union needs at least one member");
        return StateSet::make_union(std::move(members));
    }
    if (kind == "complement") return StateSet::complement_of(subspace_from_fields(j));
    throw ParseError("unknown state set kind: " + kind);
}

json state_set_to_json(const StateSet& s) {
    using K = StateSet::Kind;
    switch (s.kind()) {
        case K::FullSpace:
            return json{{"kind", "fullspace"}, {"dim", s.ambient_dim()}};
        case K::Finite: {
            json pts = json::array();
            for (const auto& p : s.points()) pts.push_back(vec_to_json(p));
            return json{{"kind", "finite"}, {"dim", s.ambient_dim()}, {"points", pts}};
        }
        case K::Lin:
            return subspace_to_json(s.subspace());
        case K::Coset: {
            json out = subspace_to_json(s.subspace());
            out["kind"] = "coset";
            out["offset"] = vec_to_json(s.offset());
            return out;
        }
        case K::Poly: {
            json verts = json::array();
            for (const auto& p : s.vertices()) verts.push_back(vec_to_json(p));
            return json{{"kind", "poly"}, {"dim", s.ambient_dim()}, {"vertices", verts}};
        }
        case K::Union: {
            json members = json::array();
            for (const auto& m : s.members()) members.push_back(state_set_to_json(m));
            return json{{"kind", "union"}, {"dim", s.ambient_dim()}, {"members", members}};
        }
        case K::ComplementOfSubspace: {
            json out = subspace_to_json(s.subspace());
            out["kind"] = "complement";
            return out;
        }
        case K::Lifted: {
            json verts = json::array();
            for (const auto& p : s.vertices()) verts.push_back(vec_to_json(p));
            json out = subspace_to_json(s.subspace());
            out["kind"] = "lifted";
            out["quotient_vertices"] = verts;
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

ParsedModel parse_model_json(const json& j) {
    if (!j.is_object()) throw ParseError("model must be a JSON object");
    Mat a = mat_from_json(j.at("A"));
    Mat b = mat_from_json(j.at("B"));
    Mat c = mat_from_json(j.at("C"));
    Mat d = j.contains("D") ? mat_from_json(j.at("D")) : Mat::zero(c.rows(), b.cols());
    LtiSystem sys(a, b, c, d);

    Mat bt = b, dt = d;
    if (j.contains("attack")) {
        const json& att = j.at("attack");
        bt = mat_from_json(att.at("B"));
        dt = att.contains("D") ? mat_from_json(att.at("D")) : Mat::zero(c.rows(), bt.cols());
    }
    AttackChannel chan(bt, dt);
    if (bt.rows() != sys.state_dim() || dt.rows() != sys.output_dim())
        throw ModelError("attack channel dimensions do not match the system");

    std::map<std::string, StateSet> sets;
    if (j.contains("sets"))
        for (const auto& [name, sj] : j.at("sets").items()) {
            StateSet s = state_set_from_json(sj);
            if (s.ambient_dim() != sys.state_dim())
                throw ModelError("state set '" + name + "' has the wrong ambient dimension");
            sets.emplace(name, std::move(s));
        }
    return ParsedModel{std::move(sys), std::move(chan), std::move(sets)};
}

ParsedModel parse_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open model file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError("malformed JSON in " + path + ": " + e.what());
    }
    return parse_model_json(j);
}

std::string fnv1a64_hex(const std::string& data) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace ltisec
