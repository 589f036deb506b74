#pragma once

#include <vector>

#include "patgf/poly.hpp"

namespace patgf {

// Rational function in z in normal form: gcd(num, den) = 1 and den monic.
// The normal form is unique, so structural equality coincides with equality
// of values; ratfun_equal still checks by cross-multiplication.
class RatFun {
public:
    RatFun() : den_(Rational(1)) {}
    RatFun(const Rational& constant) : num_(constant), den_(Rational(1)) {}  // NOLINT
    RatFun(int constant) : RatFun(Rational(constant)) {}
    RatFun(const Poly& p) : num_(p), den_(Rational(1)) {}  // NOLINT
    // Reduces and rescales; throws std::domain_error when den is zero.
    RatFun(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    // Throws std::domain_error when b is zero.
    friend RatFun operator/(const RatFun& a, const RatFun& b);
    RatFun operator-() const;

    RatFun& operator+=(const RatFun& b) { return *this = *this + b; }
    RatFun& operator-=(const RatFun& b) { return *this = *this - b; }
    RatFun& operator*=(const RatFun& b) { return *this = *this * b; }

    bool operator==(const RatFun& other) const;

private:
    // num and den already co-prime: only rescales the denominator monic.
    static RatFun from_coprime(Poly num, Poly den);

    Poly num_;
    Poly den_;
};

// Equality by cross-multiplication: f.num * g.den = g.num * f.den.
bool ratfun_equal(const RatFun& f, const RatFun& g);

// Coefficients c_0..c_order of the power-series expansion around z = 0,
// by exact long division. Throws std::domain_error on a pole at z = 0.
std::vector<Rational> series_expand(const RatFun& f, int order);

}  // namespace patgf
