#pragma once

#include <string>

#include "patgf/ratfun.hpp"

namespace patgf {

// Descending-power rendering, e.g. "z^5-3*z^4+11*z^3-13*z^2+6*z-1".
std::string poly_to_string(const Poly& p, const std::string& var = "z");

// Canonical form as stored: reduced fraction with monic denominator,
// e.g. "(1/8*z^5 - 1/8*z^4)/(z^3 - 3/2*z^2 + 3/4*z - 1/8)".
std::string ratfun_to_string(const RatFun& f);

// Factored display in the style of the classical tables: trial-divides out
// powers of z, (1-z) and (1-2*z), clears rational content to primitive
// integer polynomials with positive leading coefficients, and prints e.g.
// "-z^4*(z^5-3*z^4+11*z^3-13*z^2+6*z-1)/(1-2*z)^5". No general
// factorization is attempted; equality checks never rely on this string.
std::string ratfun_to_factored_string(const RatFun& f);

}  // namespace patgf
