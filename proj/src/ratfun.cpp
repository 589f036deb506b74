#include "patgf/ratfun.hpp"

#include <utility>

namespace patgf {

namespace {

Poly exact_div(const Poly& a, const Poly& g) {
    if (g.degree() == 0) return g.leading() == 1 ? a : a * (Rational(1) / g.leading());
    return poly_divmod(a, g).quot;
}

}  // namespace

RatFun RatFun::from_coprime(Poly num, Poly den) {
    RatFun f;
    if (num.is_zero()) return f;
    const Rational scale = Rational(1) / den.leading();
    f.num_ = scale == 1 ? std::move(num) : num * scale;
    f.den_ = scale == 1 ? std::move(den) : den * scale;
    return f;
}

RatFun::RatFun(Poly num, Poly den) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num.is_zero()) {
        den_ = Poly(Rational(1));
        return;
    }
    Poly g = Poly::gcd(num, den);
    *this = from_coprime(exact_div(num, g), exact_div(den, g));
}

// a/b + c/d with b, d monic and both fractions reduced: split off g = gcd(b, d)
// so the closing reduction only has to look at g, never the full denominators.
RatFun operator+(const RatFun& a, const RatFun& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const Poly g = Poly::gcd(a.den_, b.den_);
    if (g.degree() <= 0) {
        return RatFun::from_coprime(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    const Poly da = exact_div(a.den_, g);
    const Poly db = exact_div(b.den_, g);
    Poly num = a.num_ * db + b.num_ * da;
    if (num.is_zero()) return RatFun();
    const Poly h = Poly::gcd(num, g);
    if (h.degree() > 0) num = exact_div(num, h);
    return RatFun::from_coprime(std::move(num), da * exact_div(g, h) * db);
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
    if (a.is_zero() || b.is_zero()) return RatFun();
    const Poly g1 = Poly::gcd(a.num_, b.den_);
    const Poly g2 = Poly::gcd(b.num_, a.den_);
    return RatFun::from_coprime(exact_div(a.num_, g1) * exact_div(b.num_, g2),
                                exact_div(a.den_, g2) * exact_div(b.den_, g1));
}

RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero rational function");
    return a * RatFun::from_coprime(b.den_, b.num_);
}

RatFun RatFun::operator-() const {
    RatFun r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

bool RatFun::operator==(const RatFun& other) const { return ratfun_equal(*this, other); }

bool ratfun_equal(const RatFun& f, const RatFun& g) {
    return f.num() * g.den() == g.num() * f.den();
}

std::vector<Rational> series_expand(const RatFun& f, int order) {
    if (order < 0) throw std::domain_error("negative series order");
    if (f.den().coeff(0) == 0) throw std::domain_error("series expansion at a pole of z = 0");
    std::vector<Rational> c;
    c.reserve(order + 1);
    const Rational& d0 = f.den().coeff(0);
    for (int k = 0; k <= order; ++k) {
        Rational s = f.num().coeff(k);
        for (int i = 1; i <= k && i <= f.den().degree(); ++i) s -= f.den().coeff(i) * c[k - i];
        c.push_back(s / d0);
    }
    return c;
}

}  // namespace patgf
