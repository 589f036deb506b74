#pragma once

#include <json.hpp>

#include "patgf/oracle.hpp"
#include "patgf/ratfun.hpp"

namespace patgf {

// {"num": ["0", "-1/2", ...], "den": [...]}; coefficient i belongs to z^i,
// rationals rendered "p/q" (or "p" when the denominator is 1).
nlohmann::json ratfun_to_json(const RatFun& f);
RatFun ratfun_from_json(const nlohmann::json& j);

nlohmann::json series_to_json(const std::vector<Rational>& coeffs);

// {"n": n, "counts": [{"r": ..., "s": ..., "count": ...}, ...]}
nlohmann::json joint_table_to_json(const oracle::JointTable& table);

}  // namespace patgf
