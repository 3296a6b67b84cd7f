#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace ltisec {

using Int = boost::multiprecision::cpp_int;

// Exact rational scalar. cpp_rational keeps values in lowest terms with a
// positive denominator, which is exactly the canonical form we rely on for
// syntactic equality everywhere else.
using Rat = boost::multiprecision::cpp_rational;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parses "p/q", plain integers ("-3") and decimal literals ("0.5", "-1.25")
// into an exact rational. Decimal digits are converted exactly, never through
// floating point.
Rat parse_rat(const std::string& text);

// Renders as "p" for integers, "p/q" otherwise.
std::string rat_to_string(const Rat& r);

} // namespace ltisec
