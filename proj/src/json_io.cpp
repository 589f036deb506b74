#include "patgf/json_io.hpp"

namespace patgf {

namespace {

nlohmann::json poly_to_json(const Poly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Rational& c : p.coeffs()) arr.push_back(rational_to_string(c));
    return arr;
}

Poly poly_from_json(const nlohmann::json& arr) {
    std::vector<Rational> coeffs;
    coeffs.reserve(arr.size());
    for (const auto& s : arr) coeffs.push_back(rational_from_string(s.get<std::string>()));
    return Poly(std::move(coeffs));
}

}  // namespace

nlohmann::json ratfun_to_json(const RatFun& f) {
    return {{"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}};
}

RatFun ratfun_from_json(const nlohmann::json& j) {
    return RatFun(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

nlohmann::json series_to_json(const std::vector<Rational>& coeffs) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Rational& c : coeffs) arr.push_back(rational_to_string(c));
    return arr;
}

nlohmann::json joint_table_to_json(const oracle::JointTable& table) {
    nlohmann::json counts = nlohmann::json::array();
    for (const auto& [rs, count] : table.counts)
        counts.push_back({{"r", rs.first}, {"s", rs.second}, {"count", count}});
    return {{"n", table.n}, {"counts", counts}};
}

}  // namespace patgf
