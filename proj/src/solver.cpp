#include "patgf/solver.hpp"

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

namespace patgf {

SolveError::SolveError(Func f, Point p, int m, const std::string& what)
    : std::runtime_error("stage (" + std::string(to_string(f)) + ", " + to_string(p) +
                         ", order " + std::to_string(m) + "): " + what),
      func(f),
      point(p),
      order(m) {}

const RatFun& DerivTable::at(const DerivKey& key) const {
    auto it = values.find(key);
    if (it == values.end()) throw std::out_of_range("derivative table has no " + to_string(key));
    return it->second;
}

namespace {

// One equation linear in the current stage's unknowns.
struct LinearRelation {
    std::map<DerivKey, RatFun> coeffs;
    RatFun constant;
};

// Substitutes solved values into a specialized relation. Returns nothing if
// the relation still contains a key that is neither solved nor a stage
// unknown, or a product of two unknowns (only possible for admitted
// higher-order relations; those are simply not usable).
std::optional<LinearRelation> linearize(const SpecializedRelation& rel,
                                        const std::map<DerivKey, RatFun>& solved,
                                        const std::set<DerivKey>& stage_unknowns) {
    LinearRelation lin;
    for (const auto& [keys, coeff] : rel.terms) {
        RatFun value = coeff;
        std::vector<DerivKey> open;
        for (const auto& k : keys) {
            auto it = solved.find(k);
            if (it != solved.end())
                value *= it->second;
            else
                open.push_back(k);
        }
        if (open.empty()) {
            lin.constant += value;
            continue;
        }
        if (open.size() > 1) return std::nullopt;
        if (!stage_unknowns.count(open[0])) return std::nullopt;
        lin.coeffs[open[0]] += value;
        if (lin.coeffs[open[0]].is_zero()) lin.coeffs.erase(open[0]);
    }
    return lin;
}

// Gaussian elimination over the rational-function field. Rows are
// [coefficients | constant] with the equation sum + constant = 0.
// Pivots favor small operands: lowest deg(num) + deg(den).
std::optional<std::vector<RatFun>> gaussian_solve(std::vector<std::vector<RatFun>> rows,
                                                  size_t n_unknowns) {
    auto pivot_size = [](const RatFun& f) {
        return f.num().degree() + f.den().degree();
    };

    size_t n_rows = rows.size();
    std::vector<size_t> pivot_row(n_unknowns, SIZE_MAX);
    size_t next_row = 0;
    for (size_t col = 0; col < n_unknowns && next_row < n_rows; ++col) {
        size_t best = SIZE_MAX;
        for (size_t r = next_row; r < n_rows; ++r) {
            if (rows[r][col].is_zero()) continue;
            if (best == SIZE_MAX || pivot_size(rows[r][col]) < pivot_size(rows[best][col]))
                best = r;
        }
        if (best == SIZE_MAX) continue;
        std::swap(rows[next_row], rows[best]);
        const RatFun pivot = rows[next_row][col];
        for (size_t j = col; j <= n_unknowns; ++j) rows[next_row][j] = rows[next_row][j] / pivot;
        for (size_t r = 0; r < n_rows; ++r) {
            if (r == next_row || rows[r][col].is_zero()) continue;
            const RatFun factor = rows[r][col];
            for (size_t j = col; j <= n_unknowns; ++j)
                rows[r][j] -= factor * rows[next_row][j];
        }
        pivot_row[col] = next_row;
        ++next_row;
    }

    for (size_t col = 0; col < n_unknowns; ++col)
        if (pivot_row[col] == SIZE_MAX) return std::nullopt;  // underdetermined

    // Leftover rows must have reduced to 0 = 0.
    for (size_t r = next_row; r < n_rows; ++r)
        if (!rows[r][n_unknowns].is_zero())
            throw std::logic_error("inconsistent stage system");

    std::vector<RatFun> solution(n_unknowns);
    for (size_t col = 0; col < n_unknowns; ++col)
        solution[col] = -rows[pivot_row[col]][n_unknowns];
    return solution;
}

class StagedSolver {
public:
    StagedSolver(int r, bool include_q) : r_(r), include_q_(include_q) {
        EquationPair eqs = build_equations();
        p_derivs_ = derivative_table(eqs.p, r);
        if (include_q) q_derivs_ = derivative_table(eqs.q, r);
    }

    DerivTable solve() {
        DerivTable table;
        table.order = r_;
        table.includes_q = include_q_;
        for (Point pt : {Point::C, Point::B, Point::A}) {
            for (int m = 0; m <= r_; ++m) {
                run_stage(Func::P, pt, m, table.values);
                if (include_q_) run_stage(Func::Q, pt, m, table.values);
            }
        }
        return table;
    }

private:
    // Extends the memoized derivative map on demand; only the fallback path
    // ever asks for an order beyond r.
    const EqExpr& deriv(Func f, const DerivOrder& o) {
        auto& table = f == Func::P ? p_derivs_ : q_derivs_;
        auto it = table.find(o);
        if (it != table.end()) return it->second;
        if (o.a > 0)
            table[o] = differentiate(deriv(f, {o.a - 1, o.b, o.c}), Var::q);
        else if (o.b > 0)
            table[o] = differentiate(deriv(f, {o.a, o.b - 1, o.c}), Var::z);
        else
            table[o] = differentiate(deriv(f, {o.a, o.b, o.c - 1}), Var::t);
        return table.at(o);
    }

    void run_stage(Func func, Point pt, int m, std::map<DerivKey, RatFun>& solved) {
        std::vector<DerivKey> unknowns;
        for (const DerivOrder& o : orders_of_total(m)) unknowns.push_back({func, o, pt});
        std::set<DerivKey> unknown_set(unknowns.begin(), unknowns.end());

        std::vector<LinearRelation> relations;
        auto admit = [&](int order, bool strict) {
            for (const DerivOrder& o : orders_of_total(order)) {
                auto lin = linearize(specialize(deriv(func, o), pt), solved, unknown_set);
                if (!lin) {
                    if (strict)
                        throw SolveError(func, pt, m, "relation is not linear in stage unknowns");
                    continue;
                }
                if (!lin->coeffs.empty() || !lin->constant.is_zero()) relations.push_back(*lin);
            }
        };
        admit(m, /*strict=*/true);

        auto solution = eliminate(relations, unknowns);
        if (!solution) {
            // Underdetermined with the same-order relations alone: admit the
            // next order's relations (only those already linear in this
            // stage's unknowns) before giving up.
            admit(m + 1, /*strict=*/false);
            solution = eliminate(relations, unknowns);
            if (!solution) throw SolveError(func, pt, m, "singular stage system");
        }
        for (size_t i = 0; i < unknowns.size(); ++i) solved[unknowns[i]] = (*solution)[i];
    }

    std::optional<std::vector<RatFun>> eliminate(const std::vector<LinearRelation>& relations,
                                                 const std::vector<DerivKey>& unknowns) {
        std::vector<std::vector<RatFun>> rows;
        rows.reserve(relations.size());
        for (const auto& rel : relations) {
            std::vector<RatFun> row(unknowns.size() + 1);
            for (size_t i = 0; i < unknowns.size(); ++i) {
                auto it = rel.coeffs.find(unknowns[i]);
                if (it != rel.coeffs.end()) row[i] = it->second;
            }
            row[unknowns.size()] = rel.constant;
            rows.push_back(std::move(row));
        }
        return gaussian_solve(std::move(rows), unknowns.size());
    }

    int r_;
    bool include_q_;
    std::map<DerivOrder, EqExpr> p_derivs_;
    std::map<DerivOrder, EqExpr> q_derivs_;
};

}  // namespace

DerivTable solve_system(int r, bool include_q) {
    if (r < 0) throw std::invalid_argument("negative derivative order");
    return StagedSolver(r, include_q).solve();
}

RatFun extract_gf(const DerivTable& table, int r, int s) {
    if (r < 0 || r > table.order)
        throw std::invalid_argument("requested order " + std::to_string(r) +
                                    " outside solved table (order " +
                                    std::to_string(table.order) + ")");
    if (s != 0 && s != 1) throw std::invalid_argument("s must be 0 or 1");
    if (s == 1 && !table.includes_q)
        throw std::invalid_argument("table was solved without the one-132 function");
    const RatFun& value = table.at({s == 0 ? Func::P : Func::Q, {r, 0, 0}, Point::A});
    return value / RatFun(Rational(factorial(r)));
}

RatFun extract_gf(int r, int s) { return extract_gf(solve_system(r, s == 1), r, s); }

int backsubstitution_check(const DerivTable& table, std::vector<std::string>* failures) {
    EquationPair eqs = build_equations();
    int checked = 0;
    auto run = [&](Func func, const EqExpr& eq) {
        for (const auto& [order, expr] : derivative_table(eq, table.order)) {
            for (Point pt : {Point::A, Point::B, Point::C}) {
                RatFun residual = evaluate(specialize(expr, pt), table.values);
                ++checked;
                if (!residual.is_zero() && failures) {
                    failures->push_back(std::string(to_string(func)) + " derivative [" +
                                        std::to_string(order.a) + "," + std::to_string(order.b) +
                                        "," + std::to_string(order.c) + "] at " + to_string(pt));
                }
            }
        }
    };
    run(Func::P, eqs.p);
    if (table.includes_q) run(Func::Q, eqs.q);
    return checked;
}

}  // namespace patgf
