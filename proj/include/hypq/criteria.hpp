#pragma once

/**
 * @file criteria.hpp
 * @brief Sufficient conditions for real-rootedness stated on the second
 *        quotients: Hutchinson's q_k >= 4, the interval condition
 *        q_k in [alpha, 8/(alpha(4 - alpha))] with 1 + sqrt 5 <= alpha < 4
 *        (degree >= 4), and the comparison condition
 *        q_k in [alpha, 0.95/(2 sqrt(alpha) - alpha)] with alpha in [3.43, 4].
 *
 * None of these consult the Sturm oracle; they are purely coefficient tests.
 */

#include "hypq/polynomial.hpp"

#include <map>
#include <optional>
#include <string>

namespace hypq {

/// Every q_k >= 4.
bool hutchinson_check(const QuotientSequence& q);

/// alpha <= q_k <= beta_bound(alpha) for all k. Requires degree >= 4 and
/// 1 + sqrt 5 <= alpha < 4 (throws HypothesisError otherwise).
bool interval_check(const QuotientSequence& q, const Rational& alpha);

struct AlphaSearch {
  std::optional<Rational> alpha;
  bool hutchinson_applies = false;
};

/// Most permissive alpha for the interval condition (alpha = q_min), or none.
/// When Hutchinson's condition already holds, returns no alpha with the flag set.
AlphaSearch find_alpha(const QuotientSequence& q);

/// alpha <= q_k and q_k (2 sqrt(alpha) - alpha) <= 19/20 for all k, decided
/// exactly as 4 q^2 alpha <= (19/20 + q alpha)^2. Requires alpha in [343/100, 4];
/// at alpha = 4 the upper constraint is vacuous.
bool theorem_c_check(const QuotientSequence& q, const Rational& alpha);

/// Largest admissible alpha for the comparison condition: min(q_min, 4), or
/// none when q_min < 343/100.
std::optional<Rational> theorem_c_alpha(const QuotientSequence& q);

inline const Rational kTheoremCAlphaMin{343, 100};
inline const Rational kTheoremCNumerator{19, 20};

struct CriterionReport {
  std::size_t degree = 0;
  bool hutchinson = false;
  std::optional<Rational> interval_alpha;
  bool interval_holds = false;
  std::optional<Rational> theorem_c_alpha;
  bool theorem_c_holds = false;
  Rational q_min;
  Rational q_max;
  /// Exact slack per criterion; nonnegative values mean the bound is met:
  ///  hutchinson:        q_min - 4
  ///  interval_lower:    q_min - alpha
  ///  interval_upper:    beta_bound(alpha) - q_max
  ///  theorem_c_upper:   min_k (19/20 + q_k alpha)^2 - 4 q_k^2 alpha
  std::map<std::string, Rational> margins;
  /// Degrees 2 and 3 sit below the interval theorem; decided by the exact
  /// discriminant instead.
  bool below_theorem1_degree = false;
  std::optional<Rational> low_degree_discriminant;
  std::optional<bool> low_degree_hyperbolic;

  /// Any criterion (or, for degrees 2-3, the discriminant) certifies real-rootedness.
  [[nodiscard]] bool certified() const {
    return hutchinson || interval_holds || theorem_c_holds || low_degree_hyperbolic.value_or(false);
  }
};

CriterionReport certify(const Polynomial& p);

}  // namespace hypq
