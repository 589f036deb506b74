#include "patgf/tripoly.hpp"

#include <vector>

namespace patgf {

TriPoly::TriPoly(const Rational& constant) {
    if (constant != 0) terms_[{0, 0, 0}] = constant;
}

TriPoly TriPoly::monomial(int eq, int ez, int et, const Rational& coeff) {
    TriPoly p;
    if (coeff != 0) p.terms_[{eq, ez, et}] = coeff;
    return p;
}

void TriPoly::add_term(const Mono& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

TriPoly operator+(const TriPoly& a, const TriPoly& b) {
    TriPoly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

TriPoly operator-(const TriPoly& a, const TriPoly& b) {
    TriPoly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
}

TriPoly operator*(const TriPoly& a, const TriPoly& b) {
    TriPoly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            r.add_term({ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]}, ca * cb);
    return r;
}

TriPoly TriPoly::operator-() const {
    TriPoly r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

TriPoly TriPoly::derivative(Var v) const {
    const int slot = static_cast<int>(v);
    TriPoly r;
    for (const auto& [m, c] : terms_) {
        if (m[slot] == 0) continue;
        Mono d = m;
        --d[slot];
        r.add_term(d, c * m[slot]);
    }
    return r;
}

Poly TriPoly::eval_qt(const Rational& q, const Rational& t) const {
    std::vector<Rational> coeffs;
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        for (int i = 0; i < m[0]; ++i) v *= q;
        for (int i = 0; i < m[2]; ++i) v *= t;
        if (v == 0) continue;
        if (static_cast<int>(coeffs.size()) <= m[1]) coeffs.resize(m[1] + 1, Rational(0));
        coeffs[m[1]] += v;
    }
    return Poly(std::move(coeffs));
}

TriPoly TriPoly::subst_t_to_qt() const {
    TriPoly r;
    for (const auto& [m, c] : terms_) r.add_term({m[0] + m[2], m[1], m[2]}, c);
    return r;
}

Rational TriPoly::eval(const Rational& q, const Rational& z, const Rational& t) const {
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        for (int i = 0; i < m[0]; ++i) v *= q;
        for (int i = 0; i < m[1]; ++i) v *= z;
        for (int i = 0; i < m[2]; ++i) v *= t;
        acc += v;
    }
    return acc;
}

std::string TriPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                out += '-';
                a = -a;
            }
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;
        std::string factors;
        static const char* names[3] = {"q", "z", "t"};
        for (int s = 0; s < 3; ++s) {
            if (m[s] == 0) continue;
            if (!factors.empty()) factors += '*';
            factors += names[s];
            if (m[s] > 1) factors += "^" + std::to_string(m[s]);
        }
        if (factors.empty()) {
            out += rational_to_string(a);
        } else {
            if (a != 1) out += rational_to_string(a) + "*";
            out += factors;
        }
    }
    return out;
}

}  // namespace patgf
