#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace patgf {

// Scalar field: arbitrary-precision rationals. cpp_rational keeps the
// invariants we rely on (denominator > 0, gcd(|num|, den) = 1).
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// cpp_rational rejects negative denominators outright; normalize the sign
// here so callers can pass any nonzero denominator.
inline Rational make_rational(BigInt num, BigInt den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(std::move(num), std::move(den));
}

inline BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Rendered as "p/q", or plain "p" when q = 1.
std::string rational_to_string(const Rational& r);

// Accepts the formats produced by rational_to_string.
Rational rational_from_string(const std::string& s);

}  // namespace patgf
