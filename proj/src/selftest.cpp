#include "patgf/selftest.hpp"

#include <algorithm>
#include <random>

#include "patgf/json_io.hpp"
#include "patgf/oracle.hpp"
#include "patgf/solver.hpp"

namespace patgf {

namespace {

Poly random_poly(std::mt19937_64& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::vector<Rational> c(deg(rng) + 1);
    for (auto& x : c) x = coeff(rng);
    return Poly(std::move(c));
}

RatFun random_ratfun(std::mt19937_64& rng, int max_degree = 3) {
    Poly den;
    while (den.is_zero()) den = random_poly(rng, max_degree);
    return RatFun(random_poly(rng, max_degree), den);
}

CheckResult field_axioms() {
    std::mt19937_64 rng(7001);
    for (int trial = 0; trial < 200; ++trial) {
        RatFun f = random_ratfun(rng), g = random_ratfun(rng), h = random_ratfun(rng);
        if (!ratfun_equal((f + g) + h, f + (g + h)))
            return {"field axioms", false, "associativity of + failed"};
        if (!ratfun_equal(f * (g + h), f * g + f * h))
            return {"field axioms", false, "distributivity failed"};
        if (!f.is_zero() && !ratfun_equal(f * (RatFun(1) / f), RatFun(1)))
            return {"field axioms", false, "multiplicative inverse failed"};
    }
    return {"field axioms", true, ""};
}

CheckResult normal_form() {
    std::mt19937_64 rng(7002);
    for (int trial = 0; trial < 200; ++trial) {
        RatFun f = random_ratfun(rng) * random_ratfun(rng) + random_ratfun(rng);
        if (!f.den().is_monic()) return {"normal form", false, "denominator not monic"};
        if (Poly::gcd(f.num(), f.den()).degree() > 0)
            return {"normal form", false, "fraction not reduced"};
        RatFun again(f.num(), f.den());
        if (!(again.num() == f.num() && again.den() == f.den()))
            return {"normal form", false, "renormalization changed a normal form"};
    }
    return {"normal form", true, ""};
}

CheckResult series_convolution() {
    constexpr int kOrder = 12;
    std::mt19937_64 rng(7003);
    for (int trial = 0; trial < 100; ++trial) {
        RatFun f = random_ratfun(rng), g = random_ratfun(rng);
        if (f.den().coeff(0) == 0 || g.den().coeff(0) == 0) continue;
        auto sf = series_expand(f, kOrder);
        auto sg = series_expand(g, kOrder);
        auto sfg = series_expand(f * g, kOrder);
        for (int k = 0; k <= kOrder; ++k) {
            Rational conv(0);
            for (int i = 0; i <= k; ++i) conv += sf[i] * sg[k - i];
            if (conv != sfg[k]) return {"series convolution", false, "mismatch"};
        }
    }
    return {"series convolution", true, ""};
}

CheckResult derivative_commutativity() {
    EquationPair eqs = build_equations();
    for (const EqExpr* eq : {&eqs.p, &eqs.q}) {
        for (const auto& [order, expr] : derivative_table(*eq, 2)) {
            for (Var u : {Var::q, Var::z, Var::t})
                for (Var v : {Var::q, Var::z, Var::t})
                    if (!(differentiate(differentiate(expr, u), v) ==
                          differentiate(differentiate(expr, v), u)))
                        return {"derivative commutativity", false, "partials do not commute"};
        }
    }
    return {"derivative commutativity", true, ""};
}

CheckResult point_closure() {
    EquationPair eqs = build_equations();
    for (const EqExpr* eq : {&eqs.p, &eqs.q}) {
        for (const auto& [order, expr] : derivative_table(*eq, 3)) {
            for (Point pt : {Point::A, Point::B, Point::C}) {
                for (const auto& [keys, coeff] : specialize(expr, pt).terms) {
                    for (const auto& k : keys) {
                        const Point expected[2] = {inner_image(pt), pt};
                        if (k.point != expected[0] && k.point != expected[1])
                            return {"substitution-point closure", false, to_string(k)};
                    }
                }
            }
        }
    }
    return {"substitution-point closure", true, ""};
}

CheckResult counter_agreement() {
    std::mt19937_64 rng(7004);
    for (int trial = 0; trial < 2000; ++trial) {
        std::uniform_int_distribution<int> len(0, 40);
        oracle::Permutation pi(len(rng));
        for (size_t i = 0; i < pi.size(); ++i) pi[i] = static_cast<int>(i) + 1;
        std::shuffle(pi.begin(), pi.end(), rng);
        if (!(oracle::count_patterns(pi) == oracle::count_patterns_reference(pi)))
            return {"pattern counter agreement", false, "fast and reference disagree"};
    }
    return {"pattern counter agreement", true, ""};
}

CheckResult weight_marginals() {
    const std::uint64_t catalan[] = {1, 1, 2, 5, 14, 42, 132, 429};
    for (int n = 0; n <= 7; ++n) {
        TriPoly w = oracle::weight_poly(n, oracle::PatternClass::Avoid132).poly;
        if (w.eval(1, 1, 1) != Rational(catalan[n]))
            return {"weight marginals", false, "q=t=1 is not the 132-avoider count"};
        Rational at_q0 = w.eval(0, 1, 1);
        Rational expected = n == 0 ? Rational(1) : Rational(BigInt(1) << (n - 1));
        if (at_q0 != expected)
            return {"weight marginals", false, "q=0,t=1 is not 2^(n-1)"};
    }
    return {"weight marginals", true, ""};
}

CheckResult solver_backsubstitution() {
    DerivTable table = solve_system(3, /*include_q=*/true);
    std::vector<std::string> failures;
    backsubstitution_check(table, &failures);
    if (!failures.empty())
        return {"solver back-substitution", false, failures.front()};
    return {"solver back-substitution", true, ""};
}

CheckResult json_round_trip() {
    std::mt19937_64 rng(7005);
    for (int trial = 0; trial < 100; ++trial) {
        RatFun f = random_ratfun(rng);
        nlohmann::json j = ratfun_to_json(f);
        std::string once = j.dump();
        std::string twice = ratfun_to_json(ratfun_from_json(nlohmann::json::parse(once))).dump();
        if (once != twice) return {"json round trip", false, once + " vs " + twice};
    }
    return {"json round trip", true, ""};
}

}  // namespace

std::vector<CheckResult> run_selftest() {
    return {
        field_axioms(),
        normal_form(),
        series_convolution(),
        derivative_commutativity(),
        point_closure(),
        counter_agreement(),
        weight_marginals(),
        solver_backsubstitution(),
        json_round_trip(),
    };
}

}  // namespace patgf
