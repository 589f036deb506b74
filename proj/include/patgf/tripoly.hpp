#pragma once

#include <array>
#include <map>
#include <string>

#include "patgf/poly.hpp"
#include "patgf/rational.hpp"

namespace patgf {

enum class Var { q = 0, z = 1, t = 2 };

// Sparse polynomial in (q, z, t) over the rationals. Keys are exponent
// triples; no zero coefficient is ever stored.
class TriPoly {
public:
    // Exponents of q, z, t in that order.
    using Mono = std::array<int, 3>;

    TriPoly() = default;
    TriPoly(const Rational& constant);  // NOLINT
    TriPoly(int constant) : TriPoly(Rational(constant)) {}

    static TriPoly monomial(int eq, int ez, int et, const Rational& coeff = Rational(1));
    static TriPoly var(Var v) { return monomial(v == Var::q, v == Var::z, v == Var::t); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Mono, Rational>& terms() const { return terms_; }

    friend TriPoly operator+(const TriPoly& a, const TriPoly& b);
    friend TriPoly operator-(const TriPoly& a, const TriPoly& b);
    friend TriPoly operator*(const TriPoly& a, const TriPoly& b);
    TriPoly operator-() const;
    TriPoly& operator+=(const TriPoly& b) { return *this = *this + b; }

    bool operator==(const TriPoly& other) const = default;
    // Arbitrary but consistent total order so expressions can live in sets.
    bool operator<(const TriPoly& other) const { return terms_ < other.terms_; }

    TriPoly derivative(Var v) const;

    // Substitute numeric q and t, keeping z symbolic.
    Poly eval_qt(const Rational& q, const Rational& t) const;

    // Substitute t -> q*t (the argument composition of the inner factor).
    TriPoly subst_t_to_qt() const;

    Rational eval(const Rational& q, const Rational& z, const Rational& t) const;

    // Maple-like rendering, e.g. "z^2*t^2" or "-1/2*q*z"; "0" when empty.
    std::string to_string() const;

private:
    void add_term(const Mono& m, const Rational& c);
    std::map<Mono, Rational> terms_;
};

}  // namespace patgf
