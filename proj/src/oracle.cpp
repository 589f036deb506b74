#include "patgf/oracle.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace patgf {
namespace oracle {

namespace {

void validate_permutation(const Permutation& pi) {
    const int n = static_cast<int>(pi.size());
    std::vector<bool> seen(n + 1, false);
    for (int v : pi) {
        if (v < 1 || v > n || seen[v])
            throw std::invalid_argument("input is not a permutation of 1..n");
        seen[v] = true;
    }
}

void validate_length(int n, int max_n) {
    if (n < 0) throw std::invalid_argument("negative permutation length");
    if (n > max_n)
        throw std::invalid_argument("length " + std::to_string(n) +
                                    " above configured maximum " + std::to_string(max_n));
}

// Reusable buffers for the quadratic counter; one per enumeration worker.
class PatternCounter {
public:
    PatternStats stats(const Permutation& pi) {
        const int n = static_cast<int>(pi.size());
        PatternStats st;
        st.n = n;
        if (n < 2) return st;

        // less_before[j][v] = #{i < j : pi[i] < v}, rows built incrementally.
        const int stride = n + 1;
        less_before_.assign(static_cast<size_t>(n) * stride, 0);
        for (int j = 1; j < n; ++j) {
            int* row = less_before_.data() + static_cast<size_t>(j) * stride;
            const int* prev = row - stride;
            const int inserted = pi[j - 1];
            for (int v = 1; v <= n; ++v) row[v] = prev[v] + (inserted < v);
        }

        for (int j = 0; j < n; ++j) {
            const int* row = less_before_.data() + static_cast<size_t>(j) * stride;
            const std::int64_t smaller_before = row[pi[j]];
            const std::int64_t larger_before = j - smaller_before;
            const std::int64_t larger_after = (n - pi[j]) - larger_before;
            st.c12 += smaller_before;
            st.c123 += smaller_before * larger_after;
        }
        for (int j = 0; j < n; ++j) {
            const int* row = less_before_.data() + static_cast<size_t>(j) * stride;
            for (int k = j + 1; k < n; ++k)
                if (pi[k] < pi[j]) st.c132 += row[pi[k]];
        }
        return st;
    }

private:
    std::vector<int> less_before_;
};

// Runs fn(acc, pi, stats) over every permutation of 1..n in lexicographic
// order, split across workers by first element; accumulators are merged
// with the commutative merge().
template <typename Acc, typename PerPerm, typename Merge>
Acc enumerate_patterns(int n, int workers, PerPerm per_perm, Merge merge) {
    Acc result{};
    if (n == 0) {
        per_perm(result, Permutation{}, PatternStats{});
        return result;
    }

    auto run_block = [n, &per_perm](const std::vector<int>& firsts) {
        Acc local{};
        PatternCounter counter;
        Permutation pi(n);
        for (int f : firsts) {
            pi[0] = f;
            int next = 0;
            for (int v = 1; v <= n; ++v)
                if (v != f) pi[1 + next++] = v;
            do {
                per_perm(local, pi, counter.stats(pi));
            } while (std::next_permutation(pi.begin() + 1, pi.end()));
        }
        return local;
    };

    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw <= 0) hw = 1;
    const int w = std::clamp(workers == 0 ? hw : workers, 1, n);
    if (w == 1 || n < 4) {
        std::vector<int> all(n);
        std::iota(all.begin(), all.end(), 1);
        return run_block(all);
    }

    std::vector<std::vector<int>> blocks(w);
    for (int f = 1; f <= n; ++f) blocks[(f - 1) % w].push_back(f);
    std::vector<std::future<Acc>> futures;
    futures.reserve(w);
    for (const auto& block : blocks)
        futures.push_back(std::async(std::launch::async, run_block, block));
    for (auto& fut : futures) merge(result, fut.get());
    return result;
}

}  // namespace

namespace detail {

PatternStats count_patterns_seq(std::span<const int> seq) {
    const int n = static_cast<int>(seq.size());
    PatternStats st;
    st.n = n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (seq[i] < seq[j]) ++st.c12;
            for (int k = j + 1; k < n; ++k) {
                if (seq[i] < seq[j] && seq[j] < seq[k]) ++st.c123;
                if (seq[i] < seq[k] && seq[k] < seq[j]) ++st.c132;
            }
        }
    return st;
}

}  // namespace detail

PatternStats count_patterns_reference(const Permutation& pi) {
    validate_permutation(pi);
    return detail::count_patterns_seq(pi);
}

PatternStats count_patterns(const Permutation& pi) {
    validate_permutation(pi);
    PatternCounter counter;
    return counter.stats(pi);
}

std::uint64_t JointTable::at(std::int64_t r, std::int64_t s) const {
    auto it = counts.find({r, s});
    return it == counts.end() ? 0 : it->second;
}

std::uint64_t JointTable::total() const {
    std::uint64_t sum = 0;
    for (const auto& [rs, count] : counts) sum += count;
    return sum;
}

JointTable joint_distribution(int n, int max_n, int workers) {
    validate_length(n, max_n);
    using Counts = std::map<std::pair<std::int64_t, std::int64_t>, std::uint64_t>;
    JointTable table;
    table.n = n;
    table.counts = enumerate_patterns<Counts>(
        n, workers,
        [](Counts& acc, const Permutation&, const PatternStats& st) {
            ++acc[{st.c123, st.c132}];
        },
        [](Counts& into, const Counts& from) {
            for (const auto& [rs, count] : from) into[rs] += count;
        });
    return table;
}

std::string to_tsv(const JointTable& table) {
    std::ostringstream os;
    os << "r\ts\tcount\n";
    for (const auto& [rs, count] : table.counts)
        os << rs.first << '\t' << rs.second << '\t' << count << '\n';
    return os.str();
}

WeightPoly weight_poly(int n, PatternClass cls, int max_n) {
    validate_length(n, max_n);
    const std::int64_t want132 = cls == PatternClass::One132 ? 1 : 0;
    WeightPoly w;
    w.n = n;
    w.cls = cls;
    w.poly = enumerate_patterns<TriPoly>(
        n, /*workers=*/0,
        [want132](TriPoly& acc, const Permutation&, const PatternStats& st) {
            if (st.c132 != want132) return;
            acc += TriPoly::monomial(static_cast<int>(st.c123), 0, static_cast<int>(st.c12));
        },
        [](TriPoly& into, const TriPoly& from) { into += from; });
    return w;
}

bool FuncEqReport::all_ok() const {
    for (const auto& e : entries)
        if (!e.p_ok || !e.q_ok) return false;
    return true;
}

FuncEqReport check_functional_equation(int n_max, int max_n) {
    validate_length(n_max, max_n);
    std::vector<TriPoly> wp, wq, wp_sub, wq_sub;  // *_sub have t replaced by q*t
    for (int n = 0; n <= n_max; ++n) {
        wp.push_back(weight_poly(n, PatternClass::Avoid132, max_n).poly);
        wq.push_back(weight_poly(n, PatternClass::One132, max_n).poly);
        wp_sub.push_back(wp.back().subst_t_to_qt());
        wq_sub.push_back(wq.back().subst_t_to_qt());
    }

    auto t_pow = [](int a) { return TriPoly::monomial(0, 0, a); };

    FuncEqReport report;
    for (int n = 0; n <= n_max; ++n) {
        FuncEqReport::Entry entry;
        entry.n = n;
        if (n == 0) {
            entry.p_ok = wp[0] == TriPoly(1);  // the empty permutation
            entry.q_ok = wq[0].is_zero();
        } else {
            TriPoly p_rhs, q_rhs;
            for (int a = 0; a <= n - 1; ++a) {
                const int b = n - 1 - a;
                p_rhs += wp_sub[a] * t_pow(a) * wp[b];
                q_rhs += wp_sub[a] * t_pow(a) * wq[b];
                q_rhs += wq_sub[a] * t_pow(a) * wp[b];
            }
            for (int a = 0; a <= n - 2; ++a) {
                const int b = n - 2 - a;
                if (b < 1) continue;
                q_rhs += t_pow(2) * wp_sub[a] * t_pow(a) * wp[b];
            }
            entry.p_ok = wp[n] == p_rhs;
            entry.q_ok = wq[n] == q_rhs;
        }
        report.entries.push_back(entry);
    }
    return report;
}

DecompReport check_decomposition(int n, int max_n) {
    if (n < 1) throw std::invalid_argument("decomposition check needs n >= 1");
    validate_length(n, max_n);

    DecompReport report;
    report.n = n;

    Permutation pi(n);
    std::iota(pi.begin(), pi.end(), 1);
    PatternCounter counter;
    do {
        const PatternStats st = counter.stats(pi);
        if (st.c132 != 0) continue;
        ++report.avoiders_checked;

        const auto max_pos = std::find(pi.begin(), pi.end(), n);
        const std::span<const int> pi1(pi.data(), max_pos - pi.begin());
        const std::span<const int> pi2(pi.data() + (max_pos - pi.begin()) + 1,
                                       pi.end() - max_pos - 1);
        const PatternStats st1 = detail::count_patterns_seq(pi1);
        const PatternStats st2 = detail::count_patterns_seq(pi2);

        auto fail = [&](const std::string& what) {
            std::ostringstream os;
            os << what << " for [";
            for (size_t i = 0; i < pi.size(); ++i) os << (i ? "," : "") << pi[i];
            os << "]";
            report.failures.push_back(os.str());
        };

        if (st.c123 != st1.c123 + st2.c123 + st1.c12) fail("#123 split identity");
        if (st.c12 != st1.c12 + st2.c12 + st1.n) fail("#12 split identity");

        // pi1 must hold exactly the values n-|pi1| .. n-1.
        std::vector<int> values(pi1.begin(), pi1.end());
        std::sort(values.begin(), values.end());
        bool top_block = true;
        for (size_t i = 0; i < values.size(); ++i)
            if (values[i] != n - static_cast<int>(values.size()) + static_cast<int>(i))
                top_block = false;
        if (!top_block) fail("prefix value-set claim");
    } while (std::next_permutation(pi.begin(), pi.end()));

    return report;
}

}  // namespace oracle
}  // namespace patgf
