#pragma once

/**
 * @file witness.hpp
 * @brief Sign-alternation certificates for Q(x) = T(-x).
 *
 * For a normalized polynomial T of degree n whose quotients satisfy the
 * interval condition, Q has a point x_j in every window
 * (q_2...q_j, q_2...q_j q_{j+1}), j = 1..n-1, with (-1)^{j-1} Q(x_j) < 0.
 * Together with Q(0) = 1 > 0 and (-1)^n Q(+inf) > 0 this gives n sign
 * changes on (0, inf), hence n real roots. Certificates carry only rationals
 * and are checked by exact evaluation.
 */

#include "hypq/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hypq {

/// Open interval (lo, hi).
struct Window {
  Rational lo;
  Rational hi;
  [[nodiscard]] bool contains(const Rational& x) const { return lo < x && x < hi; }
  friend bool operator==(const Window&, const Window&) = default;
};

/// Windows j = 1..n-1; element j-1 is (q_2...q_j, q_2...q_{j+1}).
std::vector<Window> windows(const QuotientSequence& q);

/// (-1)^{j-1} Q(x) split into head, five-term middle and tail.
struct WindowDecomposition {
  Rational sigma1;
  Rational g;
  Rational sigma2;
  std::size_t g_first = 0;  ///< first term index in the middle block
  std::size_t g_last = 0;   ///< last term index in the middle block
  bool sigma1_empty = true;
  bool sigma2_empty = true;
};

/// Low regime j <= floor(n/2): middle terms j-1..j+3; high regime: j-3..j+1.
WindowDecomposition decompose(const SignedPolynomial& Q, const QuotientSequence& q, std::size_t j, const Rational& x);

/// Term magnitudes |c_k| x^k strictly increase for k <= j and strictly
/// decrease for k >= j. x must lie inside window j.
bool window_monotonicity(const QuotientSequence& q, std::size_t j, const Rational& x);

enum class VerifyMode { Strict, SignsOnly };

struct SignAlternationCertificate {
  std::vector<Rational> points;
  std::vector<Window> windows;
  VerifyMode mode = VerifyMode::Strict;
};

struct WitnessOptions {
  /// Bisection steps spent refining critical points per window.
  std::size_t bisection_budget = 200;
};

/// Builds a certificate. Requires n >= 4 and interval_check(q, alpha)
/// (HypothesisError otherwise); throws BudgetExhausted when some window
/// yields no strict witness within the budget.
SignAlternationCertificate build_witness(const SignedPolynomial& Q, const QuotientSequence& q, const Rational& alpha,
                                         const WitnessOptions& options = {});

/// Finds a rational x inside window j with (-1)^{j-1} Q(x) < 0, if the search succeeds.
std::optional<Rational> find_window_witness(const SignedPolynomial& Q, const QuotientSequence& q, std::size_t j,
                                            const WitnessOptions& options = {});

struct VerificationResult {
  bool valid = false;
  std::optional<std::size_t> failing_index;  ///< 1-based window index j
  std::string reason;
  explicit operator bool() const { return valid; }
};

/// Strict mode checks windows and signs; SignsOnly checks ordering and signs.
VerificationResult verify_certificate(const SignedPolynomial& Q, const SignAlternationCertificate& cert,
                                      VerifyMode mode = VerifyMode::Strict);

}  // namespace hypq
