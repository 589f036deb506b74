#pragma once

#include <map>
#include <stdexcept>

#include "patgf/funceq.hpp"

namespace patgf {

// A stage with no unique solution. The equations are known to determine
// every derivative uniquely, so this signals a modeling bug, not bad input.
class SolveError : public std::runtime_error {
public:
    SolveError(Func func, Point point, int order, const std::string& what);
    Func func;
    Point point;
    int order;
};

// Solved derivative values at the three points, complete through the
// requested total order for P (and Q when included).
struct DerivTable {
    std::map<DerivKey, RatFun> values;
    int order = 0;
    bool includes_q = false;

    const RatFun& at(const DerivKey& key) const;
};

// Solves for all derivative unknowns of total order <= r. Stages run point
// C, then B, then A; within a point by increasing order, P before Q. Each
// stage is a linear system over the rational-function field once earlier
// stages are substituted, solved by Gaussian elimination.
DerivTable solve_system(int r, bool include_q);

// Generating function counting permutations of length n (coefficient of
// z^n) with s 132-patterns (s in {0, 1}) and exactly r 123-patterns:
// the (r,0,0) derivative of P (s = 0) or Q (s = 1) at point A, over r!.
RatFun extract_gf(const DerivTable& table, int r, int s);
RatFun extract_gf(int r, int s);

// Residuals of every specialized relation of every mixed partial up to the
// table's order under the solved values; all must be zero.
// Returns the number of relations checked; *failures collects nonzero ones.
int backsubstitution_check(const DerivTable& table, std::vector<std::string>* failures = nullptr);

}  // namespace patgf
