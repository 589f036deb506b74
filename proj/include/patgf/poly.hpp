#pragma once

#include <initializer_list>
#include <vector>

#include "patgf/rational.hpp"

namespace patgf {

// Dense univariate polynomial in z over the rationals. Coefficient i is the
// coefficient of z^i; the last stored coefficient is nonzero (the zero
// polynomial stores nothing). Values are immutable after construction.
class Poly {
public:
    Poly() = default;
    Poly(const Rational& constant);  // NOLINT: implicit scalar lift is intended
    Poly(int constant) : Poly(Rational(constant)) {}
    explicit Poly(std::vector<Rational> coeffs);
    Poly(std::initializer_list<Rational> coeffs);

    static Poly monomial(int degree, const Rational& coeff = Rational(1));

    bool is_zero() const { return c_.empty(); }
    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& leading() const;
    // Coefficient of z^i; zero outside the stored range.
    const Rational& coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& x) const;

    bool is_monic() const { return !c_.empty() && leading() == 1; }

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Rational& s);
    friend Poly operator*(const Rational& s, const Poly& a) { return a * s; }
    Poly operator-() const;

    bool operator==(const Poly& other) const { return c_ == other.c_; }

    // Remainder-free division helper for the display code: fills *quot and
    // returns true exactly when b divides a.
    static bool divides(const Poly& a, const Poly& b, Poly* quot = nullptr);

    // Monic gcd over the rationals; gcd(0, 0) = 0.
    static Poly gcd(Poly a, Poly b);

private:
    void trim();
    std::vector<Rational> c_;
};

struct PolyDivMod {
    Poly quot;
    Poly rem;
};

// Euclidean division; throws std::domain_error when b is zero.
PolyDivMod poly_divmod(const Poly& a, const Poly& b);

}  // namespace patgf
