// Acceptance suite: exercises every exit criterion end to end and prints one
// pass/fail line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "patgf/display.hpp"
#include "patgf/oracle.hpp"
#include "patgf/solver.hpp"

using namespace patgf;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& name, bool passed, const std::string& detail = "") {
    std::cout << (passed ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": " << name;
    if (!detail.empty()) std::cout << " | " << detail;
    std::cout << std::endl;
    if (!passed) ++g_failures;
}

RatFun make(const Poly& num, const Poly& den) { return RatFun(num, den); }

Poly zp(int k) { return Poly::monomial(k); }

Poly pw(const Poly& base, int k) {
    Poly r(1);
    for (int i = 0; i < k; ++i) r = r * base;
    return r;
}

const Poly kOneMinusZ{1, -1};
const Poly kOneMinus2Z{1, -2};

// The eleven published closed forms, transcribed verbatim.
std::vector<std::pair<int, RatFun>> published_avoid() {
    return {
        {0, make(kOneMinusZ, kOneMinus2Z)},
        {1, make(zp(3), pw(kOneMinus2Z, 2))},
        {2, make(zp(4) * kOneMinusZ, pw(kOneMinus2Z, 3))},
        {3, make(zp(5) * pw(Poly{-1, 1}, 2), pw(kOneMinus2Z, 4))},
        {4, make(-(zp(4) * Poly{-1, 6, -13, 11, -3, 1}), pw(kOneMinus2Z, 5))},
        {5, make(zp(5) * Poly{-1, 1} * Poly{-2, 12, -25, 19, -3, 1}, pw(kOneMinus2Z, 6))},
    };
}

std::vector<std::pair<int, RatFun>> published_one132() {
    return {
        {0, make(zp(3), pw(kOneMinus2Z, 2))},
        {1, make(zp(5) * Rational(2), pw(kOneMinus2Z, 3))},
        {2, make(-(zp(4) * Poly{-1, 4, -6, 1}), pw(kOneMinus2Z, 4))},
        {3, make(zp(5) * Rational(2) * kOneMinusZ * Poly{1, -4, 5}, pw(kOneMinus2Z, 5))},
        {4, make(zp(6) * Poly{5, -30, 65, -55, 12, 1}, pw(kOneMinus2Z, 6))},
    };
}

void criterion_1(const DerivTable& table) {
    int matched = 0, total = 0;
    std::string detail;
    auto compare = [&](int s, const std::vector<std::pair<int, RatFun>>& expected) {
        for (const auto& [r, gf] : expected) {
            ++total;
            if (ratfun_equal(extract_gf(table, r, s), gf))
                ++matched;
            else
                detail += " mismatch at r=" + std::to_string(r) + ",s=" + std::to_string(s);
        }
    };
    compare(0, published_avoid());
    compare(1, published_one132());
    report(1, "closed-form reproduction",
           matched == total,
           std::to_string(matched) + "/" + std::to_string(total) + " closed forms" + detail);
}

void criterion_2(const DerivTable& table, const std::vector<oracle::JointTable>& joints) {
    const int nmax = static_cast<int>(joints.size()) - 1;
    bool ok = true;
    std::string detail;
    for (int s = 0; s <= 1; ++s) {
        const int rmax = s == 0 ? 5 : 4;
        for (int r = 0; r <= rmax; ++r) {
            const auto coeffs = series_expand(extract_gf(table, r, s), nmax);
            for (int n = 0; n <= nmax; ++n) {
                if (coeffs[n] != Rational(joints[n].at(r, s))) {
                    ok = false;
                    detail = "first mismatch at n=" + std::to_string(n) + ",r=" +
                             std::to_string(r) + ",s=" + std::to_string(s);
                }
            }
        }
    }
    report(2, "oracle agreement n<=" + std::to_string(nmax) + ", r<=5 (s=0) and r<=4 (s=1)",
           ok, detail);
}

void criterion_3() {
    const auto rep = oracle::check_functional_equation(8);
    std::string detail;
    for (const auto& e : rep.entries)
        if (!e.p_ok || !e.q_ok) detail += " n=" + std::to_string(e.n);
    report(3, "functional-equation identity n<=8", rep.all_ok(), detail);
}

void criterion_4() {
    bool ok = true;
    std::uint64_t checked = 0;
    std::string detail;
    for (int n = 1; n <= 8; ++n) {
        const auto rep = oracle::check_decomposition(n);
        checked += rep.avoiders_checked;
        if (!rep.all_ok()) {
            ok = false;
            detail = rep.failures.front();
        }
    }
    report(4, "decomposition identities n<=8", ok,
           std::to_string(checked) + " avoiders split" + (detail.empty() ? "" : "; " + detail));
}

void criterion_5(const std::vector<oracle::JointTable>& joints) {
    const std::uint64_t catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
    bool ok = true;
    std::string detail;
    std::uint64_t factorial = 1;
    for (int n = 0; n < static_cast<int>(joints.size()); ++n) {
        if (n > 0) factorial *= n;
        if (joints[n].total() != factorial) {
            ok = false;
            detail += " total(n=" + std::to_string(n) + ") != n!";
        }
        if (n <= 8) {
            std::uint64_t avoiders = 0;
            for (const auto& [rs, count] : joints[n].counts)
                if (rs.second == 0) avoiders += count;
            if (avoiders != catalan[n]) {
                ok = false;
                detail += " marginal(n=" + std::to_string(n) + ") not Catalan";
            }
        }
    }
    report(5, "sanity sums (n! totals, Catalan s=0 marginal n=0..8)", ok, detail);
}

void criterion_6(const DerivTable& r5_table) {
    std::vector<std::string> failures;
    const int checked = backsubstitution_check(r5_table, &failures);

    bool consistent = true;
    const DerivTable r2_table = solve_system(2, true);
    for (const auto& [key, value] : r2_table.values) {
        if (!(r5_table.at(key) == value)) consistent = false;
    }
    report(6, "solver self-consistency (back-substitution r=5; r=5 vs r=2 agreement)",
           failures.empty() && consistent,
           std::to_string(checked) + " relations checked" +
               (failures.empty() ? "" : "; residual nonzero: " + failures.front()) +
               (consistent ? "" : "; r=5 and r=2 tables disagree"));
}

void criterion_7(const DerivTable& r5_table, const std::vector<oracle::JointTable>& joints) {
    const int nmax = static_cast<int>(joints.size()) - 1;
    bool ok = true;
    std::string detail;

    const RatFun ar6 = extract_gf(solve_system(6, false), 6, 0);
    const RatFun aaron5 = extract_gf(r5_table, 5, 1);
    const RatFun* gfs[2] = {&ar6, &aaron5};
    const int rs[2][2] = {{6, 0}, {5, 1}};
    for (int i = 0; i < 2; ++i) {
        const auto coeffs = series_expand(*gfs[i], nmax);
        for (int n = 0; n <= nmax; ++n) {
            if (coeffs[n] != Rational(joints[n].at(rs[i][0], rs[i][1]))) {
                ok = false;
                detail += " mismatch at n=" + std::to_string(n) + " for r=" +
                          std::to_string(rs[i][0]) + ",s=" + std::to_string(rs[i][1]);
            }
        }
    }
    report(7, "beyond-table smoke check (r=6 s=0 and r=5 s=1 vs oracle)", ok, detail);
    std::cout << "       AR(6,z)    = " << ratfun_to_factored_string(ar6) << "\n";
    std::cout << "       Aaron(5,z) = " << ratfun_to_factored_string(aaron5) << "\n";
}

}  // namespace

int main() {
    const auto start = std::chrono::steady_clock::now();

    const DerivTable table = solve_system(5, true);
    std::vector<oracle::JointTable> joints;
    for (int n = 0; n <= 9; ++n) joints.push_back(oracle::joint_distribution(n));

    criterion_1(table);
    criterion_2(table, joints);
    criterion_3();
    criterion_4();
    criterion_5(joints);
    criterion_6(table);
    criterion_7(table, joints);

    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                              start);
    std::cout << (g_failures == 0 ? "acceptance: all criteria passed"
                                  : "acceptance: " + std::to_string(g_failures) +
                                        " criterion(s) FAILED")
              << " (" << elapsed.count() << " ms)" << std::endl;
    return g_failures == 0 ? 0 : 1;
}
