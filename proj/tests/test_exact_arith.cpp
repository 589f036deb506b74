#include <doctest.h>

#include "patgf/ratfun.hpp"
#include "test_util.hpp"

using namespace patgf;
using namespace patgf::test;

TEST_SUITE("exact_arith") {

TEST_CASE("rational strings") {
    CHECK(rational_to_string(make_rational(6, -4)) == "-3/2");
    CHECK(rational_to_string(Rational(7)) == "7");
    CHECK(rational_from_string("-3/2") == make_rational(3, -2));
    CHECK(rational_from_string("42") == Rational(42));
    CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
}

TEST_CASE("poly basics") {
    Poly p{1, 0, -2};  // 1 - 2z^2
    CHECK(p.degree() == 2);
    CHECK(p.coeff(0) == 1);
    CHECK(p.coeff(5) == 0);
    CHECK(Poly{0, 0, 0}.is_zero());
    CHECK((p - p).is_zero());
    CHECK(p.eval(2) == -7);

    Poly prod = kOneMinusZ * kOneMinus2Z;  // 1 - 3z + 2z^2
    CHECK(prod == Poly{1, -3, 2});
    auto dm = poly_divmod(prod, kOneMinusZ);
    CHECK(dm.quot == kOneMinus2Z);
    CHECK(dm.rem.is_zero());
    CHECK_THROWS_AS(poly_divmod(p, Poly()), std::domain_error);
}

TEST_CASE("poly gcd is monic") {
    Poly a = kOneMinusZ * kOneMinus2Z;
    Poly b = kOneMinus2Z * Poly{1, 1};
    CHECK(Poly::gcd(a, b) == Poly{Rational("-1/2"), 1});  // monic form of 1-2z
    CHECK(Poly::gcd(Poly(), Poly()).is_zero());
    CHECK(Poly::gcd(a, Poly()) == Poly::gcd(Poly(), a));
}

TEST_CASE("normalization") {
    // (z - z^2)/(1 - 2z): reduced, denominator scaled monic
    RatFun f(Poly{0, 1, -1}, kOneMinus2Z);
    CHECK(f.den() == Poly{Rational("-1/2"), 1});
    CHECK(f.num() == Poly{0, Rational("-1/2"), Rational("1/2")});

    // zero numerator collapses to 0/1
    RatFun zero(Poly(), kOneMinus2Z);
    CHECK(zero.is_zero());
    CHECK(zero.den() == Poly(1));

    // common factors cancel to the same normal form
    RatFun lhs(zpow(5) * Rational(2), ppow(kOneMinus2Z, 3));
    RatFun rhs(zpow(5) * Rational(4) * kOneMinusZ,
               kOneMinusZ * ppow(kOneMinus2Z, 3) * Rational(2));
    CHECK(ratfun_equal(lhs, rhs));
    CHECK(lhs.num() == rhs.num());
    CHECK(lhs.den() == rhs.den());

    CHECK_THROWS_AS(RatFun(Poly(1), Poly()), std::domain_error);
    CHECK_THROWS_AS(RatFun(1) / RatFun(), std::domain_error);
}

TEST_CASE("cross-multiplication equality") {
    RatFun a(zpow(4) * kOneMinusZ, ppow(kOneMinus2Z, 3));
    RatFun b(zpow(4) - zpow(5), Poly{1, -6, 12, -8});
    CHECK(ratfun_equal(a, b));

    CHECK_FALSE(ratfun_equal(RatFun(kOneMinusZ, kOneMinus2Z), RatFun(Poly(1), kOneMinus2Z)));

    RatFun c(-(zpow(4) * Poly{-1, 4, -6, 1}), ppow(kOneMinus2Z, 4));
    RatFun d(zpow(4) * Poly{1, -4, 6, -1}, ppow(kOneMinus2Z, 4));
    CHECK(ratfun_equal(c, d));
}

TEST_CASE("series expansion") {
    RatFun ar0(kOneMinusZ, kOneMinus2Z);
    CHECK(series_expand(ar0, 5) ==
          std::vector<Rational>{1, 1, 2, 4, 8, 16});

    RatFun geo(Poly(1), kOneMinusZ);
    CHECK(series_expand(geo, 3) == std::vector<Rational>{1, 1, 1, 1});

    RatFun ar1(zpow(3), ppow(kOneMinus2Z, 2));
    CHECK(series_expand(ar1, 5) == std::vector<Rational>{0, 0, 0, 1, 4, 12});

    CHECK_THROWS_AS(series_expand(RatFun(Poly(1), zpow(1)), 3), std::domain_error);
}

TEST_CASE("field axioms on random values") {
    std::mt19937_64 rng(20260809);
    for (int trial = 0; trial < 300; ++trial) {
        RatFun f = random_ratfun(rng), g = random_ratfun(rng), h = random_ratfun(rng);
        CHECK(ratfun_equal((f + g) + h, f + (g + h)));
        CHECK(ratfun_equal(f * (g + h), f * g + f * h));
        CHECK(ratfun_equal(f * g, g * f));
        CHECK(ratfun_equal(f + (-f), RatFun()));
        if (!f.is_zero()) CHECK(ratfun_equal(f * (RatFun(1) / f), RatFun(1)));
    }
}

TEST_CASE("normal form is maintained by arithmetic") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 300; ++trial) {
        RatFun f = random_ratfun(rng) * random_ratfun(rng) - random_ratfun(rng);
        CHECK(f.den().is_monic());
        CHECK(Poly::gcd(f.num(), f.den()).degree() <= 0);
        RatFun renorm(f.num(), f.den());
        CHECK(renorm.num() == f.num());
        CHECK(renorm.den() == f.den());
    }
}

TEST_CASE("series of a product is the convolution of series") {
    constexpr int kOrder = 10;
    std::mt19937_64 rng(4242);
    int tested = 0;
    while (tested < 100) {
        RatFun f = random_ratfun(rng), g = random_ratfun(rng);
        if (f.den().coeff(0) == 0 || g.den().coeff(0) == 0) continue;
        ++tested;
        auto sf = series_expand(f, kOrder);
        auto sg = series_expand(g, kOrder);
        auto sfg = series_expand(f * g, kOrder);
        for (int k = 0; k <= kOrder; ++k) {
            Rational conv(0);
            for (int i = 0; i <= k; ++i) conv += sf[i] * sg[k - i];
            CHECK(conv == sfg[k]);
        }
    }
}

}  // TEST_SUITE
