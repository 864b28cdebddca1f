#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"
#include "knotob/laurent.hpp"
#include "knotob/obstruction.hpp"
#include "knotob/rational.hpp"

namespace knotob {

/// Polynomials serialize as {"exponent": "num/den", ...}.
inline nlohmann::json poly_to_json(const LaurentPoly& p) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [e, c] : p.terms()) out[std::to_string(e)] = to_string(c);
  return out;
}

inline LaurentPoly poly_from_json(const nlohmann::json& j) {
  LaurentPoly p;
  for (const auto& [key, value] : j.items()) p.add_term(std::stoll(key), parse_rational(value.get<std::string>()));
  return p;
}

namespace detail {

inline nlohmann::json opt_rational(const std::optional<Rational>& r) {
  return r ? nlohmann::json(to_string(*r)) : nlohmann::json(nullptr);
}

inline std::optional<Rational> read_opt_rational(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return parse_rational(j.at(key).get<std::string>());
}

}  // namespace detail

inline nlohmann::json report_to_json(const ObstructionReport& r) {
  nlohmann::json j;
  j["alexander"] = poly_to_json(r.alexander);
  j["jones"] = r.jones ? poly_to_json(*r.jones) : nlohmann::json(nullptr);
  j["determinant"] = r.determinant.convert_to<std::int64_t>();
  j["sigma"] = r.sigma ? nlohmann::json(*r.sigma) : nlohmann::json(nullptr);
  j["w3"] = detail::opt_rational(r.w3);
  j["lambda_w"] = detail::opt_rational(r.lambda_w);
  j["theta_at_1"] = detail::opt_rational(r.theta_at_1);
  j["theta_at_minus1"] = detail::opt_rational(r.theta_at_minus1);
  j["ob"] = detail::opt_rational(r.ob);
  j["ob_mod16"] = r.ob_mod16 ? nlohmann::json(*r.ob_mod16) : nlohmann::json(nullptr);
  j["ob_mod16_nonzero"] = r.ob_mod16_nonzero;
  j["verdict"] = to_string(r.verdict);
  j["notes"] = r.notes;
  if (r.two_loop) j["two_loop"] = poly_to_json(*r.two_loop);
  return j;
}

inline ObstructionReport report_from_json(const nlohmann::json& j) {
  ObstructionReport r;
  r.alexander = poly_from_json(j.at("alexander"));
  if (!j.at("jones").is_null()) r.jones = poly_from_json(j.at("jones"));
  r.determinant = Integer(j.at("determinant").get<std::int64_t>());
  if (!j.at("sigma").is_null()) r.sigma = j.at("sigma").get<int>();
  r.w3 = detail::read_opt_rational(j, "w3");
  r.lambda_w = detail::read_opt_rational(j, "lambda_w");
  r.theta_at_1 = detail::read_opt_rational(j, "theta_at_1");
  r.theta_at_minus1 = detail::read_opt_rational(j, "theta_at_minus1");
  r.ob = detail::read_opt_rational(j, "ob");
  if (!j.at("ob_mod16").is_null()) r.ob_mod16 = j.at("ob_mod16").get<std::int64_t>();
  r.ob_mod16_nonzero = j.at("ob_mod16_nonzero").get<bool>();
  r.verdict = parse_verdict(j.at("verdict").get<std::string>());
  r.notes = j.at("notes").get<std::vector<std::string>>();
  if (j.contains("two_loop")) r.two_loop = poly_from_json(j.at("two_loop"));
  return r;
}

}  // namespace knotob
