#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "patgf/tripoly.hpp"

namespace patgf {
namespace oracle {

// Enumerating n! permutations is kept behind this guard; 9 is sub-second,
// 11 is the practical ceiling (~40M permutations).
inline constexpr int kDefaultMaxN = 9;
inline constexpr int kHardMaxN = 11;

using Permutation = std::vector<int>;  // one-line notation over 1..n

struct PatternStats {
    int n = 0;
    std::int64_t c12 = 0;   // pairs i<j with pi[i] < pi[j]
    std::int64_t c123 = 0;  // increasing triples
    std::int64_t c132 = 0;  // triples order-isomorphic to 132
    bool operator==(const PatternStats&) const = default;
};

// Direct triple/pair loops; the ground truth the fast counter is checked
// against. Throws std::invalid_argument unless pi is a permutation of 1..n.
PatternStats count_patterns_reference(const Permutation& pi);

// Quadratic counter: c123 via smaller-before x larger-after per middle
// position, c132 via a prefix smaller-count table. Same validation.
PatternStats count_patterns(const Permutation& pi);

// Size-n distribution over (r = #123, s = #132), all n! permutations.
struct JointTable {
    int n = 0;
    std::map<std::pair<std::int64_t, std::int64_t>, std::uint64_t> counts;

    std::uint64_t at(std::int64_t r, std::int64_t s) const;
    std::uint64_t total() const;
    bool operator==(const JointTable&) const = default;
};

// Exact enumeration in lexicographic order, optionally fanned out across
// workers by first element (0 = pick automatically, 1 = serial). Throws
// std::invalid_argument when n is negative or exceeds max_n.
JointTable joint_distribution(int n, int max_n = kDefaultMaxN, int workers = 0);

std::string to_tsv(const JointTable& table);

enum class PatternClass { Avoid132, One132 };

// Sum of q^#123 * t^#12 over length-n permutations in the class; the
// z-exponent is fixed at n and not stored in the polynomial.
struct WeightPoly {
    int n = 0;
    PatternClass cls = PatternClass::Avoid132;
    TriPoly poly;  // in q and t only
};

WeightPoly weight_poly(int n, PatternClass cls, int max_n = kDefaultMaxN);

// Checks, as exact polynomial identities in (q, t), that the brute-force
// weight polynomials satisfy the two functional equations length by length:
//   W^P_n = sum_{a+b=n-1} W^P_a(q,qt) * t^a * W^P_b(q,t)
//   W^Q_n = sum_{a+b=n-1} [W^P_a(q,qt) t^a W^Q_b + W^Q_a(q,qt) t^a W^P_b]
//           + t^2 * sum_{a+b=n-2, b>=1} W^P_a(q,qt) t^a W^P_b
struct FuncEqReport {
    struct Entry {
        int n = 0;
        bool p_ok = false;
        bool q_ok = false;
    };
    std::vector<Entry> entries;
    bool all_ok() const;
};

FuncEqReport check_functional_equation(int n_max, int max_n = kDefaultMaxN);

// Splits every 132-avoider of length n at its maximum into pi1, pi2 and
// checks the counting identities
//   #123(pi) = #123(pi1) + #123(pi2) + #12(pi1)
//   #12(pi)  = #12(pi1) + #12(pi2) + |pi1|
// plus the structural claim that pi1 occupies exactly the top |pi1| values
// below n.
struct DecompReport {
    int n = 0;
    std::uint64_t avoiders_checked = 0;
    std::vector<std::string> failures;
    bool all_ok() const { return failures.empty(); }
};

DecompReport check_decomposition(int n, int max_n = kDefaultMaxN);

namespace detail {
// Pattern counts of an arbitrary sequence of distinct values (order
// isomorphism is all that matters). No validation.
PatternStats count_patterns_seq(std::span<const int> seq);
}  // namespace detail

}  // namespace oracle
}  // namespace patgf
