#include "ltisec/rational.hpp"

#include <cctype>

namespace ltisec {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rat parse_rat(const std::string& text) {
    std::string s = text;
    // trim
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    if (s.empty()) throw ParseError("empty rational literal");

    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
        neg = (s[0] == '-');
        s.erase(s.begin());
    }
    if (s.empty()) throw ParseError("bare sign in rational literal: '" + text + "'");

    auto slash = s.find('/');
    Rat value;
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw ParseError("malformed fraction: '" + text + "'");
        Int d(den);
        if (d == 0) throw ParseError("zero denominator: '" + text + "'");
        value = Rat(Int(num), d);
    } else {
        auto dot = s.find('.');
        if (dot == std::string::npos) {
            if (!all_digits(s)) throw ParseError("malformed integer: '" + text + "'");
            value = Rat(Int(s));
        } else {
            std::string whole = s.substr(0, dot);
            std::string frac = s.substr(dot + 1);
            if (whole.empty()) whole = "0";
            if (frac.empty()) frac = "0";
            if (!all_digits(whole) || !all_digits(frac))
                throw ParseError("malformed decimal: '" + text + "'");
            Int scale = 1;
            for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
            value = Rat(Int(whole) * scale + Int(frac), scale);
        }
    }
    if (neg) value = -value;
    return value;
}

std::string rat_to_string(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

} // namespace ltisec
