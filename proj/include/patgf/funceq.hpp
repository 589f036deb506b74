#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "patgf/ratfun.hpp"
#include "patgf/tripoly.hpp"

namespace patgf {

// The two generating functions of the functional-equation system:
// P sums weights of 132-avoiding permutations, Q of permutations with
// exactly one 132 pattern.
enum class Func { P = 0, Q = 1 };

// Only two argument compositions ever occur: the plain tuple (q, z, t) and
// the composed tuple (q, z*t, q*t). Differentiation keeps this set closed.
enum class ArgKind { Inner = 0, Outer = 1 };

// The three substitution points for (q, z, t); z stays symbolic at A and B.
//   A = [0, z, 1],  B = [0, z, 0],  C = [0, 0, 0]
enum class Point { A = 0, B = 1, C = 2 };

// Composing the inner arguments with a point lands on another point:
// (q, z*t, q*t) at A gives [0, z, 0] = B, at B gives C, at C stays C.
Point inner_image(Point p);
Point specialize_args(ArgKind args, Point p);

const char* to_string(Func f);
const char* to_string(Point p);

// Number of derivatives taken in each argument slot.
struct DerivOrder {
    int a = 0, b = 0, c = 0;
    int total() const { return a + b + c; }
    auto operator<=>(const DerivOrder&) const = default;
};

// All multi-indices with the given total order / with total order <= r.
std::vector<DerivOrder> orders_of_total(int total);
std::vector<DerivOrder> orders_up_to(int r);

// One derivative-of-function factor, e.g. P[1,0,0](q,z*t,q*t).
struct FuncDeriv {
    Func func;
    DerivOrder order;
    ArgKind args;
    auto operator<=>(const FuncDeriv&) const = default;
};

// An unknown of the solved system: a derivative value at a point.
struct DerivKey {
    Func func;
    DerivOrder order;
    Point point;
    auto operator<=>(const DerivKey&) const = default;
};

std::string to_string(const FuncDeriv& f);
std::string to_string(const DerivKey& k);

// Sum of terms coefficient * product-of-factors, kept canonical: factor
// lists sorted, terms with equal factor multisets merged, no zero
// coefficients. This is the shape of the functional equations and all of
// their mixed partial derivatives (moved to the form LHS = 0).
class EqExpr {
public:
    using FactorList = std::vector<FuncDeriv>;

    EqExpr() = default;

    // Adds coeff * factors; factors need not be sorted.
    void add_term(FactorList factors, const TriPoly& coeff);

    const std::map<FactorList, TriPoly>& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }
    bool operator==(const EqExpr& other) const = default;
    bool operator<(const EqExpr& other) const { return terms_ < other.terms_; }

    std::string to_string() const;

private:
    std::map<FactorList, TriPoly> terms_;
};

// LHS = 0 forms of the two functional equations:
//   P = 1 + z*P(q,z*t,q*t)*P(q,z,t)
//   Q = z*P(q,z*t,q*t)*Q + z*Q(q,z*t,q*t)*P + t^2*z^2*P(q,z*t,q*t)*(P - 1)
// The P equation has 3 terms, the Q equation 5 after distributing.
struct EquationPair {
    EqExpr p;
    EqExpr q;
};
EquationPair build_equations();

// Product rule over coefficient and factors; inner factors pick up the
// chain-rule multipliers of (q, z*t, q*t).
EqExpr differentiate(const EqExpr& e, Var v);

// Mixed partial along a canonical path (slot order q, then z, then t).
EqExpr mixed_partial(const EqExpr& e, const DerivOrder& order);

// All mixed partials of total order <= r keyed by multi-index; partials
// commute, so this is the complete set.
std::map<DerivOrder, EqExpr> derivative_table(const EqExpr& e, int r);

// Set-valued variant: deduplicates expressions that happen to coincide.
// Size is at most C(r+3, 3).
std::set<EqExpr> all_derivatives(const EqExpr& e, int r);

// A specialized equation: sum over terms of coeff * product of derivative
// unknowns, plus LHS = 0 implied. Multilinear in the unknowns; the solver
// substitutes already-known values to obtain linear relations.
struct SpecializedRelation {
    // Key: sorted multiset of unknowns; empty key holds the constant term.
    std::map<std::vector<DerivKey>, RatFun> terms;

    bool operator==(const SpecializedRelation&) const = default;
};

// Evaluates every TriPoly coefficient at the point (q, t numeric, z symbolic
// at A and B, zero at C) and maps every factor to its DerivKey.
SpecializedRelation specialize(const EqExpr& e, Point point);

// Plugs known values in for every factor; requires all keys present.
// Used for back-substitution checks.
RatFun evaluate(const SpecializedRelation& rel, const std::map<DerivKey, RatFun>& values);

}  // namespace patgf
