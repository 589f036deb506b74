// Command-line front end: closed-form generating functions for permutations
// counted by 123-patterns among 132-avoiders (ar) and among permutations
// with exactly one 132 (aaron), series expansion, and independent
// brute-force verification.

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "patgf/display.hpp"
#include "patgf/json_io.hpp"
#include "patgf/oracle.hpp"
#include "patgf/selftest.hpp"
#include "patgf/solver.hpp"

namespace {

using namespace patgf;

constexpr int kMaxOrder = 8;    // q-derivative order cap without --unsafe-limits
constexpr int kMaxEnum = 11;    // enumeration length cap without --unsafe-limits
constexpr int kMaxSeries = 1000;

struct Options {
    bool json = false;
    bool unsafe_limits = false;
};

void require_bound(int value, int bound, const std::string& what, bool unsafe_ok) {
    if (value < 0) throw CLI::ValidationError(what + " must be nonnegative");
    if (value > bound && !unsafe_ok)
        throw CLI::ValidationError(what + " exceeds " + std::to_string(bound) +
                                   " (pass --unsafe-limits to acknowledge the cost)");
}

void print_checks(const std::vector<CheckResult>& checks) {
    for (const auto& c : checks) {
        std::cout << (c.passed ? "[PASS] " : "[FAIL] ") << c.name;
        if (!c.passed && !c.detail.empty()) std::cout << ": " << c.detail;
        std::cout << "\n";
    }
}

nlohmann::json checks_to_json(const std::vector<CheckResult>& checks) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks)
        arr.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return arr;
}

bool all_passed(const std::vector<CheckResult>& checks) {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

int run_gf(int r, int s, const Options& opt) {
    const RatFun g = extract_gf(solve_system(r, s == 1), r, s);
    const std::string label = s == 0 ? "AR" : "Aaron";
    if (opt.json) {
        nlohmann::json out = {{"command", s == 0 ? "ar" : "aaron"},
                              {"r", r},
                              {"s", s},
                              {"factored", ratfun_to_factored_string(g)},
                              {"canonical", ratfun_to_string(g)},
                              {"ratfun", ratfun_to_json(g)}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << label << "(" << r << ",z) = " << ratfun_to_factored_string(g) << "\n";
        std::cout << "canonical: " << ratfun_to_string(g) << "\n";
    }
    return 0;
}

int run_series(int r, int s, int order, const Options& opt) {
    const RatFun g = extract_gf(solve_system(r, s == 1), r, s);
    const auto coeffs = series_expand(g, order);
    if (opt.json) {
        nlohmann::json out = {{"command", "series"},
                              {"r", r},
                              {"s", s},
                              {"order", order},
                              {"coefficients", series_to_json(coeffs)}};
        std::cout << out.dump() << "\n";
    } else {
        for (size_t i = 0; i < coeffs.size(); ++i)
            std::cout << (i ? ", " : "") << rational_to_string(coeffs[i]);
        std::cout << "\n";
    }
    return 0;
}

int run_verify(int rmax, int smax, int nmax, const Options& opt) {
    std::vector<CheckResult> checks;

    const DerivTable table = solve_system(rmax, smax >= 1);
    std::vector<oracle::JointTable> joints;
    for (int n = 0; n <= nmax; ++n) joints.push_back(oracle::joint_distribution(n, nmax));

    for (int s = 0; s <= smax; ++s) {
        for (int r = 0; r <= rmax; ++r) {
            const auto coeffs = series_expand(extract_gf(table, r, s), nmax);
            CheckResult c{"series agreement r=" + std::to_string(r) + " s=" + std::to_string(s) +
                              " (n<=" + std::to_string(nmax) + ")",
                          true, ""};
            for (int n = 0; n <= nmax; ++n) {
                if (coeffs[n] != Rational(joints[n].at(r, s))) {
                    c.passed = false;
                    c.detail = "mismatch at n=" + std::to_string(n);
                    break;
                }
            }
            checks.push_back(std::move(c));
        }
    }

    const oracle::FuncEqReport feq = oracle::check_functional_equation(nmax, nmax);
    CheckResult fp{"functional equation, 132-avoiders (n<=" + std::to_string(nmax) + ")", true, ""};
    CheckResult fq{"functional equation, one-132 (n<=" + std::to_string(nmax) + ")", true, ""};
    for (const auto& e : feq.entries) {
        if (!e.p_ok) {
            fp.passed = false;
            fp.detail += (fp.detail.empty() ? "n=" : ",") + std::to_string(e.n);
        }
        if (!e.q_ok) {
            fq.passed = false;
            fq.detail += (fq.detail.empty() ? "n=" : ",") + std::to_string(e.n);
        }
    }
    checks.push_back(std::move(fp));
    checks.push_back(std::move(fq));

    CheckResult dec{"decomposition identities (n<=" + std::to_string(nmax) + ")", true, ""};
    for (int n = 1; n <= nmax; ++n) {
        const auto rep = oracle::check_decomposition(n, nmax);
        if (!rep.all_ok()) {
            dec.passed = false;
            dec.detail = rep.failures.front();
            break;
        }
    }
    checks.push_back(std::move(dec));

    const bool ok = all_passed(checks);
    if (opt.json) {
        nlohmann::json out = {{"command", "verify"}, {"rmax", rmax},   {"smax", smax},
                              {"nmax", nmax},        {"passed", ok},   {"checks", checks_to_json(checks)}};
        std::cout << out.dump() << "\n";
    } else {
        print_checks(checks);
        std::cout << (ok ? "verify: all checks passed" : "verify: FAILED") << "\n";
    }
    return ok ? 0 : 1;
}

int run_selftest_cmd(const Options& opt) {
    const auto checks = run_selftest();
    const bool ok = all_passed(checks);
    if (opt.json) {
        nlohmann::json out = {
            {"command", "selftest"}, {"passed", ok}, {"checks", checks_to_json(checks)}};
        std::cout << out.dump() << "\n";
    } else {
        print_checks(checks);
        std::cout << (ok ? "selftest: all checks passed" : "selftest: FAILED") << "\n";
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Generating functions for permutations with a prescribed number of 132 and 123 "
        "patterns, derived from functional equations and verified by brute force"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--json", opt.json, "emit JSON instead of text");
    app.add_flag("--unsafe-limits", opt.unsafe_limits,
                 "lift the r/n safety caps (factorial and symbolic cost grow quickly)");

    int r = 0, s = 0, order = 0;
    int rmax = 5, smax = 1, nmax = oracle::kDefaultMaxN;

    CLI::App* ar = app.add_subcommand(
        "ar", "closed form counting 132-avoiding permutations with exactly r 123-patterns");
    ar->add_option("r", r, "number of 123-patterns")->required();

    CLI::App* aaron = app.add_subcommand(
        "aaron", "closed form counting permutations with one 132 and exactly r 123-patterns");
    aaron->add_option("r", r, "number of 123-patterns")->required();

    CLI::App* series =
        app.add_subcommand("series", "series coefficients 0..n of the chosen closed form");
    series->add_option("--r", r, "number of 123-patterns")->required();
    series->add_option("--s", s, "number of 132-patterns (0 or 1)")->default_val(0);
    series->add_option("--n", order, "highest coefficient to print")->required();

    CLI::App* verify = app.add_subcommand(
        "verify", "compare every closed form against brute-force enumeration");
    verify->add_option("--rmax", rmax, "highest r to verify")->default_val(5);
    verify->add_option("--smax", smax, "highest s to verify (0 or 1)")->default_val(1);
    verify->add_option("--nmax", nmax, "longest permutations to enumerate")
        ->default_val(oracle::kDefaultMaxN);

    CLI::App* selftest = app.add_subcommand("selftest", "run the module invariant suites");

    try {
        app.parse(argc, argv);

        if (s < 0 || s > 1 || smax < 0 || smax > 1)
            throw CLI::ValidationError("s is limited to 0 or 1: no functional equation exists "
                                       "for two or more 132-patterns");
        require_bound(r, kMaxOrder, "r", opt.unsafe_limits);
        require_bound(rmax, kMaxOrder, "rmax", opt.unsafe_limits);
        require_bound(nmax, kMaxEnum, "nmax", opt.unsafe_limits);
        require_bound(order, kMaxSeries, "n", opt.unsafe_limits);

        if (ar->parsed()) return run_gf(r, 0, opt);
        if (aaron->parsed()) return run_gf(r, 1, opt);
        if (series->parsed()) return run_series(r, s, order, opt);
        if (verify->parsed()) return run_verify(rmax, smax, nmax, opt);
        if (selftest->parsed()) return run_selftest_cmd(opt);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
