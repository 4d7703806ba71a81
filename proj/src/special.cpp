#include "hypq/special.hpp"

#include "hypq/sturm.hpp"

#include <string>
#include <vector>

namespace hypq {

Polynomial theta_section(const Rational& a_squared, std::size_t degree) {
  if (a_squared <= 1) throw InvalidArgument("theta section needs a^2 > 1");
  if (degree < 2) throw InvalidArgument("theta section needs degree >= 2");
  return from_quotients(QuotientSequence(std::vector<Rational>(degree - 1, a_squared)), 1, 1);
}

ThresholdResult theta_threshold_search(std::size_t degree, const Rational& tolerance, std::size_t probes) {
  if (degree < 4) throw InvalidArgument("theta threshold needs degree >= 4");
  if (tolerance <= 0) throw InvalidArgument("tolerance must be positive");
  ThresholdResult r{Rational(2), Rational(5), true, 0};
  auto hyperbolic = [&](const Rational& s) {
    ++r.oracle_calls;
    return is_hyperbolic(theta_section(s, degree));
  };
  if (hyperbolic(r.non_hyperbolic) || !hyperbolic(r.hyperbolic)) {
    throw Error("theta threshold: no sign change on the bracket [2, 5] at degree " + std::to_string(degree));
  }
  while (r.hyperbolic - r.non_hyperbolic > tolerance) {
    const Rational third = (r.hyperbolic - r.non_hyperbolic) / 3;
    const Rational mid = simplest_between(r.non_hyperbolic + third, r.hyperbolic - third);
    if (hyperbolic(mid)) {
      r.hyperbolic = mid;
    } else {
      r.non_hyperbolic = mid;
    }
  }
  // Hyperbolicity in a^2 at fixed degree is assumed monotone; spot-check it.
  for (std::size_t k = 1; k <= probes; ++k) {
    const Rational frac(static_cast<long>(k), static_cast<long>(probes + 1));
    const Rational above = simplest_between(r.hyperbolic + (5 - r.hyperbolic) * frac / 2,
                                            r.hyperbolic + (5 - r.hyperbolic) * frac);
    const Rational below = simplest_between(r.non_hyperbolic - (r.non_hyperbolic - 2) * frac,
                                            r.non_hyperbolic - (r.non_hyperbolic - 2) * frac / 2);
    if (!hyperbolic(above) || hyperbolic(below)) r.monotone_consistent = false;
  }
  return r;
}

Rational theta_threshold(std::size_t degree, const Rational& tolerance) {
  return theta_threshold_search(degree, tolerance).hyperbolic;
}

QuotientSequence alternating_quotients(const Rational& alpha, const Rational& beta, std::size_t degree) {
  if (!(1 < alpha && alpha < beta)) throw InvalidArgument("alternating quotients need 1 < alpha < beta");
  if (degree < 2) throw InvalidArgument("alternating quotients need degree >= 2");
  std::vector<Rational> q;
  for (std::size_t k = 2; k <= degree; ++k) q.push_back(k % 2 == 0 ? alpha : beta);
  return QuotientSequence(std::move(q));
}

Polynomial alternating_truncation(const Rational& alpha, const Rational& beta, std::size_t degree) {
  if (degree < 4) throw InvalidArgument("alternating truncation needs degree >= 4");
  return from_quotients(alternating_quotients(alpha, beta, degree), 1, 1);
}

std::optional<std::size_t> first_non_hyperbolic_degree(const std::function<Polynomial(std::size_t)>& family,
                                                       std::size_t min_degree, std::size_t max_degree) {
  for (std::size_t n = min_degree; n <= max_degree; ++n) {
    if (!is_hyperbolic(family(n))) return n;
  }
  return std::nullopt;
}

}  // namespace hypq
