#include "patgf/funceq.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace patgf {

Point inner_image(Point p) {
    switch (p) {
        case Point::A: return Point::B;
        case Point::B: return Point::C;
        case Point::C: return Point::C;
    }
    throw std::logic_error("bad point");
}

Point specialize_args(ArgKind args, Point p) {
    return args == ArgKind::Outer ? p : inner_image(p);
}

const char* to_string(Func f) { return f == Func::P ? "P" : "Q"; }

const char* to_string(Point p) {
    switch (p) {
        case Point::A: return "A";
        case Point::B: return "B";
        case Point::C: return "C";
    }
    return "?";
}

std::vector<DerivOrder> orders_of_total(int total) {
    std::vector<DerivOrder> out;
    for (int a = total; a >= 0; --a)
        for (int b = total - a; b >= 0; --b) out.push_back({a, b, total - a - b});
    return out;
}

std::vector<DerivOrder> orders_up_to(int r) {
    std::vector<DerivOrder> out;
    for (int m = 0; m <= r; ++m) {
        auto level = orders_of_total(m);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::string to_string(const FuncDeriv& f) {
    std::string s = to_string(f.func);
    if (f.order.total() > 0)
        s += "[" + std::to_string(f.order.a) + "," + std::to_string(f.order.b) + "," +
             std::to_string(f.order.c) + "]";
    s += f.args == ArgKind::Outer ? "(q,z,t)" : "(q,z*t,q*t)";
    return s;
}

std::string to_string(const DerivKey& k) {
    std::string s = to_string(k.func);
    s += "[" + std::to_string(k.order.a) + "," + std::to_string(k.order.b) + "," +
         std::to_string(k.order.c) + "]@";
    s += to_string(k.point);
    return s;
}

void EqExpr::add_term(FactorList factors, const TriPoly& coeff) {
    if (coeff.is_zero()) return;
    std::sort(factors.begin(), factors.end());
    auto [it, inserted] = terms_.emplace(std::move(factors), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::string EqExpr::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [factors, coeff] : terms_) {
        // Single-monomial coefficients fold their sign into the term.
        std::string cs = coeff.to_string();
        bool negative = false;
        if (coeff.terms().size() == 1 && cs[0] == '-') {
            negative = true;
            cs = cs.substr(1);
        }
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        std::string body;
        if (coeff.terms().size() > 1) {
            body = "(" + cs + ")";
        } else if (cs != "1" || factors.empty()) {
            body = cs;
        }
        for (const auto& f : factors) {
            if (!body.empty()) body += '*';
            body += patgf::to_string(f);
        }
        out += body;
    }
    return out;
}

EquationPair build_equations() {
    const FuncDeriv p_out{Func::P, {}, ArgKind::Outer};
    const FuncDeriv p_in{Func::P, {}, ArgKind::Inner};
    const FuncDeriv q_out{Func::Q, {}, ArgKind::Outer};
    const FuncDeriv q_in{Func::Q, {}, ArgKind::Inner};

    const TriPoly one(1);
    const TriPoly z = TriPoly::var(Var::z);
    const TriPoly t2z2 = TriPoly::monomial(0, 2, 2);

    // P(q,z,t) - 1 - z*P(q,z*t,q*t)*P(q,z,t) = 0
    EqExpr p;
    p.add_term({p_out}, one);
    p.add_term({}, -one);
    p.add_term({p_in, p_out}, -z);

    // Q - z*P(q,z*t,q*t)*Q - z*Q(q,z*t,q*t)*P - t^2*z^2*P(q,z*t,q*t)*(P - 1) = 0
    EqExpr q;
    q.add_term({q_out}, one);
    q.add_term({p_in, q_out}, -z);
    q.add_term({q_in, p_out}, -z);
    q.add_term({p_in, p_out}, -t2z2);
    q.add_term({p_in}, t2z2);

    return {std::move(p), std::move(q)};
}

namespace {

// Chain rule for one factor: derivative of F[order]@args with respect to v
// as a sum of multiplier * new-factor. Outer arguments are the variables
// themselves; inner arguments are (q, z*t, q*t).
struct ChainTerm {
    TriPoly multiplier;
    DerivOrder bump;  // which slot(s) gained a derivative
};

std::vector<ChainTerm> chain_rule(ArgKind args, Var v) {
    const TriPoly one(1);
    if (args == ArgKind::Outer) {
        switch (v) {
            case Var::q: return {{one, {1, 0, 0}}};
            case Var::z: return {{one, {0, 1, 0}}};
            case Var::t: return {{one, {0, 0, 1}}};
        }
    } else {
        switch (v) {
            case Var::q: return {{one, {1, 0, 0}}, {TriPoly::var(Var::t), {0, 0, 1}}};
            case Var::z: return {{TriPoly::var(Var::t), {0, 1, 0}}};
            case Var::t: return {{TriPoly::var(Var::z), {0, 1, 0}}, {TriPoly::var(Var::q), {0, 0, 1}}};
        }
    }
    throw std::logic_error("bad variable");
}

}  // namespace

EqExpr differentiate(const EqExpr& e, Var v) {
    EqExpr out;
    for (const auto& [factors, coeff] : e.terms()) {
        TriPoly dcoeff = coeff.derivative(v);
        if (!dcoeff.is_zero()) out.add_term(factors, dcoeff);
        for (size_t i = 0; i < factors.size(); ++i) {
            for (const auto& ct : chain_rule(factors[i].args, v)) {
                EqExpr::FactorList next = factors;
                next[i].order.a += ct.bump.a;
                next[i].order.b += ct.bump.b;
                next[i].order.c += ct.bump.c;
                out.add_term(std::move(next), coeff * ct.multiplier);
            }
        }
    }
    return out;
}

EqExpr mixed_partial(const EqExpr& e, const DerivOrder& order) {
    EqExpr cur = e;
    for (int i = 0; i < order.a; ++i) cur = differentiate(cur, Var::q);
    for (int i = 0; i < order.b; ++i) cur = differentiate(cur, Var::z);
    for (int i = 0; i < order.c; ++i) cur = differentiate(cur, Var::t);
    return cur;
}

std::map<DerivOrder, EqExpr> derivative_table(const EqExpr& e, int r) {
    std::map<DerivOrder, EqExpr> table;
    table[{0, 0, 0}] = e;
    // Each entry is one derivative away from an already-computed parent.
    for (int m = 1; m <= r; ++m) {
        for (const DerivOrder& o : orders_of_total(m)) {
            if (o.a > 0)
                table[o] = differentiate(table.at({o.a - 1, o.b, o.c}), Var::q);
            else if (o.b > 0)
                table[o] = differentiate(table.at({o.a, o.b - 1, o.c}), Var::z);
            else
                table[o] = differentiate(table.at({o.a, o.b, o.c - 1}), Var::t);
        }
    }
    return table;
}

std::set<EqExpr> all_derivatives(const EqExpr& e, int r) {
    std::set<EqExpr> out;
    if (r < 0) return out;
    for (auto& [order, expr] : derivative_table(e, r)) out.insert(std::move(expr));
    return out;
}

namespace {

// [q, t] assignments of the three points; z is handled separately.
void point_values(Point p, Rational& q, Rational& t, bool& z_is_zero) {
    q = 0;
    t = (p == Point::A) ? 1 : 0;
    z_is_zero = (p == Point::C);
}

}  // namespace

SpecializedRelation specialize(const EqExpr& e, Point point) {
    Rational qv, tv;
    bool z_zero = false;
    point_values(point, qv, tv, z_zero);

    SpecializedRelation rel;
    for (const auto& [factors, coeff] : e.terms()) {
        Poly c = coeff.eval_qt(qv, tv);
        if (z_zero) c = Poly(c.coeff(0));
        if (c.is_zero()) continue;

        std::vector<DerivKey> keys;
        keys.reserve(factors.size());
        for (const auto& f : factors)
            keys.push_back({f.func, f.order, specialize_args(f.args, point)});
        std::sort(keys.begin(), keys.end());

        auto [it, inserted] = rel.terms.emplace(std::move(keys), RatFun(c));
        if (!inserted) {
            it->second += RatFun(c);
            if (it->second.is_zero()) rel.terms.erase(it);
        }
    }
    return rel;
}

RatFun evaluate(const SpecializedRelation& rel, const std::map<DerivKey, RatFun>& values) {
    RatFun acc;
    for (const auto& [keys, coeff] : rel.terms) {
        RatFun term = coeff;
        for (const auto& k : keys) {
            auto it = values.find(k);
            if (it == values.end())
                throw std::out_of_range("no value for " + to_string(k));
            term *= it->second;
        }
        acc += term;
    }
    return acc;
}

}  // namespace patgf
