#pragma once

/**
 * @file lemma.hpp
 * @brief The quartic gadget S_{q2,q3,q4}(x) = 1 - x + x^2/q2 - x^3/(q2^2 q3)
 *        + x^4/(q2^3 q3^2 q4) and the exact decision procedures around it.
 *
 * The key fact: for every (q2, q3, q4) in [alpha, beta]^3 the gadget dips to
 * <= 0 somewhere in (1, alpha) exactly when alpha >= 1 + sqrt 5 and, for
 * alpha < 4, beta <= 8 / (alpha (4 - alpha)). Irrational quantities such as
 * 1 + sqrt 5 are never materialized; every comparison is an equivalent
 * polynomial inequality over Q.
 */

#include "hypq/polynomial.hpp"

#include <array>
#include <cstddef>
#include <optional>

namespace hypq {

/// Closed quotient interval [alpha, beta] with 0 < alpha <= beta.
struct IntervalSpec {
  IntervalSpec(Rational alpha_, Rational beta_);
  Rational alpha;
  Rational beta;
};

class LemmaQuartic {
 public:
  LemmaQuartic(Rational q2, Rational q3, Rational q4);

  [[nodiscard]] const Rational& q2() const { return q2_; }
  [[nodiscard]] const Rational& q3() const { return q3_; }
  [[nodiscard]] const Rational& q4() const { return q4_; }
  [[nodiscard]] const DensePoly& poly() const { return poly_; }
  [[nodiscard]] Rational operator()(const Rational& x) const { return poly_(x); }

 private:
  Rational q2_, q3_, q4_;
  DensePoly poly_;
};

/// 8 / (alpha (4 - alpha)) for 0 < alpha < 4.
Rational beta_bound(const Rational& alpha);

/// alpha >= 1 + sqrt 5, decided as alpha > 1 and (alpha - 1)^2 >= 5.
bool at_least_one_plus_sqrt5(const Rational& alpha);

/// 1 + sqrt 5 <= alpha < 4.
bool threshold_check(const Rational& alpha);

/// alpha >= 1 + sqrt 5 and (alpha >= 4 or beta <= beta_bound(alpha)).
bool condition_b(const IntervalSpec& spec);

/// S_{alpha, beta, alpha}.
LemmaQuartic extremal_quartic(const IntervalSpec& spec);

/// D = alpha^2 beta - 4 alpha beta + 8, the discriminant of
/// w^2 - alpha sqrt(beta) w + alpha beta - 2 after x = alpha sqrt(beta) y and
/// w = y + 1/y.
Rational reduced_discriminant(const IntervalSpec& spec);

/// Where a polynomial reaches <= 0. Either an exact rational point
/// (lo == hi, value <= 0 verified) or, when the only nonpositive values sit at
/// an irrational tangential root, an isolating bracket (lo, hi) of that root.
struct NonpositivePoint {
  Rational lo;
  Rational hi;
  [[nodiscard]] bool is_rational_point() const { return lo == hi; }
  /// A rational representative: the point itself or the bracket midpoint.
  [[nodiscard]] Rational representative() const { return (lo + hi) / 2; }
};

/// Exact search for x in the open interval (lo, hi) with p(x) <= 0.
std::optional<NonpositivePoint> find_nonpositive_point(const DensePoly& p, const Rational& lo, const Rational& hi);

/// Exact search for x0 in (1, alpha) with S(x0) <= 0. Requires alpha > 1.
std::optional<NonpositivePoint> has_nonpositive_point(const LemmaQuartic& s, const Rational& alpha);

/// Outcome of the two-route evaluation of statement (a).
struct StatementAReport {
  bool holds = false;             ///< direct (grid) route verdict, the returned answer
  bool reduction_verdict = false; ///< verdict through the extremal quartic
  std::size_t grid_points_checked = 0;
  /// First grid triple (q2, q3, q4) without a nonpositive point, if any.
  std::optional<std::array<Rational, 3>> counterexample;
};

/// Evaluates "every gadget with quotients in [alpha, beta]^3 has a point
/// x0 in (1, alpha) with S(x0) <= 0" along both routes. Throws Error if the
/// routes disagree. grid_resolution points per axis, endpoints included.
StatementAReport evaluate_statement_a(const IntervalSpec& spec, std::size_t grid_resolution);

inline bool lemma_statement_a(const IntervalSpec& spec, std::size_t grid_resolution) {
  return evaluate_statement_a(spec, grid_resolution).holds;
}

/// True iff p > 0 at every point of the open interval (lo, hi), exactly.
bool positive_on_open_interval(const DensePoly& p, const Rational& lo, const Rational& hi);

}  // namespace hypq
