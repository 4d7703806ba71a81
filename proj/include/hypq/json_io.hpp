#pragma once

// JSON documents exchanged by the CLI and the Python module. Every rational
// is carried as a string ("p/q" or a decimal literal) so nothing is rounded.
//
//   polynomial:  {"coeffs": ["1", "1", "1/4", ...]}
//   certificate: {"points": ["p/q", ...], "windows": [["p/q", "p/q"], ...],
//                 "mode": "strict" | "signs-only"}

#include "hypq/criteria.hpp"
#include "hypq/witness.hpp"

#include <json.hpp>

namespace hypq {

using Json = nlohmann::json;

/// Accepts a string ("p/q" or decimal) or a JSON integer; rejects floats.
Rational rational_from_json(const Json& j);

Json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

Json certificate_to_json(const SignAlternationCertificate& cert);
SignAlternationCertificate certificate_from_json(const Json& j);

Json report_to_json(const CriterionReport& report);

}  // namespace hypq
