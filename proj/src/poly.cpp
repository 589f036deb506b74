#include "patgf/poly.hpp"

#include <algorithm>
#include <utility>

namespace patgf {

namespace {
const Rational kZero(0);
}

Poly::Poly(const Rational& constant) {
    if (constant != 0) c_.push_back(constant);
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

Poly Poly::monomial(int degree, const Rational& coeff) {
    Poly p;
    if (coeff != 0) {
        p.c_.assign(degree + 1, kZero);
        p.c_[degree] = coeff;
    }
    return p;
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rational& Poly::leading() const {
    if (c_.empty()) return kZero;
    return c_.back();
}

const Rational& Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[i];
}

Rational Poly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), kZero);
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), kZero);
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, kZero);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Rational& s) {
    if (s == 0) return Poly();
    std::vector<Rational> c = a.c_;
    for (auto& x : c) x *= s;
    return Poly(std::move(c));
}

Poly Poly::operator-() const {
    std::vector<Rational> c = c_;
    for (auto& x : c) x = -x;
    return Poly(std::move(c));
}

PolyDivMod poly_divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<Rational> rem = a.coeffs();
    std::vector<Rational> quot(a.degree() - b.degree() + 1, kZero);
    const Rational& lead = b.leading();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        Rational q = rem[k + b.degree()] / lead;
        quot[k] = q;
        if (q == 0) continue;
        for (int j = 0; j <= b.degree(); ++j) rem[k + j] -= q * b.coeff(j);
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

bool Poly::divides(const Poly& a, const Poly& b, Poly* quot) {
    if (b.is_zero()) return false;
    PolyDivMod dm = poly_divmod(a, b);
    if (!dm.rem.is_zero()) return false;
    if (quot) *quot = std::move(dm.quot);
    return true;
}

namespace {

// gcd kernel over primitive integer polynomials. Plain Euclid with rational
// coefficients blows up; pseudo-remainders with a primitive reduction each
// step keep the integers small.
using ZPoly = std::vector<BigInt>;

void z_trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

void z_make_primitive(ZPoly& p) {
    BigInt content = 0;
    for (const BigInt& c : p) content = boost::multiprecision::gcd(content, c);
    if (content == 0 || content == 1) return;
    for (BigInt& c : p) c /= content;
}

ZPoly z_from_poly(const Poly& p) {
    BigInt den_lcm = 1;
    for (const Rational& c : p.coeffs()) den_lcm = lcm(den_lcm, denominator(c));
    ZPoly out;
    out.reserve(p.coeffs().size());
    for (const Rational& c : p.coeffs())
        out.push_back(numerator(c) * (den_lcm / denominator(c)));
    z_make_primitive(out);
    return out;
}

// R <- lc(B)^k * A mod B, reduced to primitive form.
ZPoly z_pseudo_rem(ZPoly r, const ZPoly& b) {
    const BigInt& lead_b = b.back();
    while (r.size() >= b.size()) {
        const BigInt lead_r = r.back();
        const size_t shift = r.size() - b.size();
        for (size_t i = 0; i + 1 < r.size(); ++i) {
            r[i] *= lead_b;
            if (i >= shift) r[i] -= lead_r * b[i - shift];
        }
        r.pop_back();
        z_trim(r);
    }
    return r;
}

}  // namespace

Poly Poly::gcd(Poly a, Poly b) {
    if (a.is_zero() || b.is_zero()) {
        Poly& only = a.is_zero() ? b : a;
        if (!only.is_zero() && only.leading() != 1)
            only = only * (Rational(1) / only.leading());
        return only;
    }
    if (a.degree() == 0 || b.degree() == 0) return Poly(1);

    ZPoly big = z_from_poly(a);
    ZPoly small = z_from_poly(b);
    if (big.size() < small.size()) std::swap(big, small);
    while (!small.empty()) {
        ZPoly rem = z_pseudo_rem(std::move(big), small);
        z_make_primitive(rem);
        big = std::move(small);
        small = std::move(rem);
    }

    std::vector<Rational> coeffs;
    coeffs.reserve(big.size());
    const BigInt& lead = big.back();
    for (const BigInt& c : big) coeffs.push_back(make_rational(c, lead));
    return Poly(std::move(coeffs));
}

}  // namespace patgf
