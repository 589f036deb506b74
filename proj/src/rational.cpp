#include "patgf/rational.hpp"

namespace patgf {

std::string rational_to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += '/';
        s += denominator(r).str();
    }
    return s;
}

Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    return make_rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

}  // namespace patgf
