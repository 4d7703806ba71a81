#include "hypq/json_io.hpp"

#include <string>
#include <vector>

namespace hypq {

namespace {

Json optional_rational(const std::optional<Rational>& r) { return r ? Json(to_string(*r)) : Json(nullptr); }

}  // namespace

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(j.dump(), 10));
  throw InvalidArgument("rationals must be strings (\"p/q\" or decimal) or integers, got " + j.dump());
}

Json polynomial_to_json(const Polynomial& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_string(c));
  return Json{{"coeffs", coeffs}};
}

Polynomial polynomial_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j.at("coeffs").is_array()) {
    throw InvalidArgument("polynomial document must be an object with a \"coeffs\" array");
  }
  std::vector<Rational> c;
  for (const auto& v : j.at("coeffs")) c.push_back(rational_from_json(v));
  return Polynomial(std::move(c));
}

Json certificate_to_json(const SignAlternationCertificate& cert) {
  Json points = Json::array();
  for (const auto& x : cert.points) points.push_back(to_string(x));
  Json wins = Json::array();
  for (const auto& w : cert.windows) wins.push_back(Json::array({to_string(w.lo), to_string(w.hi)}));
  return Json{{"points", points},
              {"windows", wins},
              {"mode", cert.mode == VerifyMode::Strict ? "strict" : "signs-only"}};
}

SignAlternationCertificate certificate_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("points") || !j.at("points").is_array()) {
    throw InvalidArgument("certificate document must be an object with a \"points\" array");
  }
  SignAlternationCertificate cert;
  for (const auto& v : j.at("points")) cert.points.push_back(rational_from_json(v));
  if (j.contains("windows")) {
    for (const auto& w : j.at("windows")) {
      if (!w.is_array() || w.size() != 2) throw InvalidArgument("each window must be a [lo, hi] pair");
      cert.windows.push_back({rational_from_json(w[0]), rational_from_json(w[1])});
    }
  }
  const std::string mode = j.value("mode", std::string("strict"));
  if (mode == "strict") {
    cert.mode = VerifyMode::Strict;
  } else if (mode == "signs-only") {
    cert.mode = VerifyMode::SignsOnly;
  } else {
    throw InvalidArgument("unknown certificate mode '" + mode + "'");
  }
  return cert;
}

Json report_to_json(const CriterionReport& r) {
  Json margins = Json::object();
  for (const auto& [k, v] : r.margins) margins[k] = to_string(v);
  Json out{{"degree", r.degree},
           {"hutchinson", r.hutchinson},
           {"interval_alpha", optional_rational(r.interval_alpha)},
           {"interval_holds", r.interval_holds},
           {"theorem_c_alpha", optional_rational(r.theorem_c_alpha)},
           {"theorem_c_holds", r.theorem_c_holds},
           {"q_min", to_string(r.q_min)},
           {"q_max", to_string(r.q_max)},
           {"margins", margins},
           {"below_theorem1_degree", r.below_theorem1_degree},
           {"certified", r.certified()}};
  if (r.below_theorem1_degree) {
    out["low_degree_discriminant"] = optional_rational(r.low_degree_discriminant);
    out["low_degree_hyperbolic"] = r.low_degree_hyperbolic.value_or(false);
  }
  return out;
}

}  // namespace hypq
