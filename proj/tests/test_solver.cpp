#include <doctest.h>

#include "patgf/oracle.hpp"
#include "patgf/solver.hpp"
#include "test_util.hpp"

using namespace patgf;
using namespace patgf::test;

namespace {

RatFun gf(const Poly& num, const Poly& den) { return RatFun(num, den); }

// the eleven published closed forms
RatFun expected_gf(int r, int s) {
    if (s == 0) {
        switch (r) {
            case 0: return gf(kOneMinusZ, kOneMinus2Z);
            case 1: return gf(zpow(3), ppow(kOneMinus2Z, 2));
            case 2: return gf(zpow(4) * kOneMinusZ, ppow(kOneMinus2Z, 3));
            case 3: return gf(zpow(5) * ppow(Poly{-1, 1}, 2), ppow(kOneMinus2Z, 4));
            case 4: return gf(-(zpow(4) * Poly{-1, 6, -13, 11, -3, 1}), ppow(kOneMinus2Z, 5));
            case 5:
                return gf(zpow(5) * Poly{-1, 1} * Poly{-2, 12, -25, 19, -3, 1},
                          ppow(kOneMinus2Z, 6));
        }
    } else {
        switch (r) {
            case 0: return gf(zpow(3), ppow(kOneMinus2Z, 2));
            case 1: return gf(zpow(5) * Rational(2), ppow(kOneMinus2Z, 3));
            case 2: return gf(-(zpow(4) * Poly{-1, 4, -6, 1}), ppow(kOneMinus2Z, 4));
            case 3:
                return gf(zpow(5) * Rational(2) * kOneMinusZ * Poly{1, -4, 5},
                          ppow(kOneMinus2Z, 5));
            case 4: return gf(zpow(6) * Poly{5, -30, 65, -55, 12, 1}, ppow(kOneMinus2Z, 6));
        }
    }
    FAIL("no published form for r=" << r << " s=" << s);
    return RatFun();
}

}  // namespace

TEST_SUITE("solver") {

TEST_CASE("base stage, avoiders only") {
    DerivTable table = solve_system(0, false);
    CHECK(table.at({Func::P, {0, 0, 0}, Point::C}) == RatFun(1));
    CHECK(table.at({Func::P, {0, 0, 0}, Point::B}) == gf(Poly(1), kOneMinusZ));
    CHECK(table.at({Func::P, {0, 0, 0}, Point::A}) == gf(kOneMinusZ, kOneMinus2Z));
    CHECK_THROWS_AS(table.at({Func::Q, {0, 0, 0}, Point::A}), std::out_of_range);
}

TEST_CASE("base stage with the one-132 function") {
    DerivTable table = solve_system(0, true);
    CHECK(table.at({Func::Q, {0, 0, 0}, Point::A}) == gf(zpow(3), ppow(kOneMinus2Z, 2)));
    CHECK(table.at({Func::Q, {0, 0, 0}, Point::B}).is_zero());
    CHECK(table.at({Func::Q, {0, 0, 0}, Point::C}).is_zero());
}

TEST_CASE("first derivative at the main point") {
    DerivTable table = solve_system(1, false);
    CHECK(table.at({Func::P, {1, 0, 0}, Point::A}) == gf(zpow(3), ppow(kOneMinus2Z, 2)));
}

TEST_CASE("published table is reproduced") {
    DerivTable table = solve_system(5, true);
    for (int r = 0; r <= 5; ++r) CHECK(ratfun_equal(extract_gf(table, r, 0), expected_gf(r, 0)));
    for (int r = 0; r <= 4; ++r) CHECK(ratfun_equal(extract_gf(table, r, 1), expected_gf(r, 1)));
}

TEST_CASE("denominators are powers of 1-2z") {
    DerivTable table = solve_system(5, true);
    for (int r = 0; r <= 5; ++r) {
        Poly expected = ppow(Poly{Rational("-1/2"), 1}, r + 1);  // monic (1-2z)^(r+1)
        CHECK(extract_gf(table, r, 0).den() == expected);
    }
    for (int r = 0; r <= 4; ++r) {
        Poly expected = ppow(Poly{Rational("-1/2"), 1}, r + 2);
        CHECK(extract_gf(table, r, 1).den() == expected);
    }
}

TEST_CASE("back-substitution of the solved table") {
    DerivTable table = solve_system(3, true);
    std::vector<std::string> failures;
    int checked = backsubstitution_check(table, &failures);
    CHECK(checked == 2 * 3 * 20);  // two equations, three points, C(6,3) partials
    CHECK(failures.empty());
}

TEST_CASE("lower-order values are independent of the solve order") {
    DerivTable small = solve_system(1, true);
    DerivTable large = solve_system(3, true);
    for (const auto& [key, value] : small.values)
        CHECK(large.at(key) == value);
}

TEST_CASE("series agree with brute force at small sizes") {
    DerivTable table = solve_system(3, true);
    std::vector<oracle::JointTable> joints;
    for (int n = 0; n <= 6; ++n) joints.push_back(oracle::joint_distribution(n));
    for (int s = 0; s <= 1; ++s) {
        for (int r = 0; r <= 3; ++r) {
            auto coeffs = series_expand(extract_gf(table, r, s), 6);
            for (int n = 0; n <= 6; ++n)
                CHECK(coeffs[n] == Rational(joints[n].at(r, s)));
        }
    }
}

TEST_CASE("extraction guards") {
    DerivTable table = solve_system(1, false);
    CHECK_THROWS_AS(extract_gf(table, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(extract_gf(table, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(extract_gf(table, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(solve_system(-1, false), std::invalid_argument);
}

}  // TEST_SUITE
