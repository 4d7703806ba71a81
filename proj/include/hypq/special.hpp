#pragma once

/**
 * @file special.hpp
 * @brief Extremal families: truncations of the partial theta function
 *        g_a(z) = sum z^k a^{-k^2} (constant second quotients a^2) and
 *        truncations with alternating quotients alpha, beta, alpha, ...
 *
 * The theta coefficients a^{-k^2} are irrational for most rational a^2, so the
 * family is realized from its quotients with a_0 = a_1 = 1. That polynomial is
 * T(x) = g(c x) / g(0) for a positive constant c, which has the same zero
 * structure up to rescaling.
 */

#include "hypq/polynomial.hpp"

#include <cstddef>
#include <functional>
#include <optional>

namespace hypq {

/// Reference value of the sharp constant for the full partial theta function.
inline constexpr double kQInfinityReference = 3.23363666;

/// Degree-n truncation with every quotient equal to a_squared (> 1).
Polynomial theta_section(const Rational& a_squared, std::size_t degree);

struct ThresholdResult {
  Rational non_hyperbolic;   ///< largest probed value found non-hyperbolic
  Rational hyperbolic;       ///< smallest probed value found hyperbolic
  bool monotone_consistent;  ///< extra probes agreed with a monotone picture
  std::size_t oracle_calls;
};

/// Bisection on [2, 5] for the smallest a^2 making theta_section hyperbolic.
/// Stops once hyperbolic - non_hyperbolic <= tolerance. Midpoints are the
/// simplest rationals in the middle third of the bracket to keep coefficient
/// sizes small. probes extra points on each side are checked afterwards.
ThresholdResult theta_threshold_search(std::size_t degree, const Rational& tolerance, std::size_t probes = 2);

/// The hyperbolic end of the final bracket.
Rational theta_threshold(std::size_t degree, const Rational& tolerance);

/// Quotients alpha, beta, alpha, ... of length degree - 1; requires 1 < alpha < beta.
QuotientSequence alternating_quotients(const Rational& alpha, const Rational& beta, std::size_t degree);

/// Positive-coefficient truncation with alternating quotients.
Polynomial alternating_truncation(const Rational& alpha, const Rational& beta, std::size_t degree);

/// The sign convention 1 - x + ... used for f_{a,b}.
inline SignedPolynomial alternating_truncation_signed(const Rational& alpha, const Rational& beta, std::size_t degree) {
  return alternate(alternating_truncation(alpha, beta, degree));
}

/// Smallest degree in [min_degree, max_degree] whose member is not hyperbolic.
std::optional<std::size_t> first_non_hyperbolic_degree(const std::function<Polynomial(std::size_t)>& family,
                                                       std::size_t min_degree, std::size_t max_degree);

}  // namespace hypq
