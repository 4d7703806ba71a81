#pragma once

/**
 * @file sturm.hpp
 * @brief Exact real-root counting and isolation via Sturm sequences.
 *
 * This is the independent referee for every hyperbolicity claim made by the
 * criteria and witness modules. Chains are built from content-stripped
 * pseudo-remainders over the integers, so no coefficient is ever rounded and
 * the coefficient growth of naive rational Euclid is avoided. Infinite
 * endpoints are handled through leading-coefficient signs.
 */

#include "hypq/polynomial.hpp"

#include <optional>
#include <vector>

namespace hypq {

using IntPoly = std::vector<Integer>;

/// An interval endpoint: a finite rational or one of +-infinity.
class Bound {
 public:
  static Bound neg_inf() { return Bound(Kind::NegInf, 0); }
  static Bound pos_inf() { return Bound(Kind::PosInf, 0); }
  Bound(const Rational& v) : kind_(Kind::Finite), value_(v) {}  // NOLINT: implicit by intent
  Bound(long v) : kind_(Kind::Finite), value_(v) {}             // NOLINT

  [[nodiscard]] bool is_finite() const { return kind_ == Kind::Finite; }
  [[nodiscard]] bool is_neg_inf() const { return kind_ == Kind::NegInf; }
  [[nodiscard]] bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  [[nodiscard]] const Rational& value() const { return value_; }

  friend bool operator<(const Bound& a, const Bound& b);

 private:
  enum class Kind { NegInf, Finite, PosInf };
  Bound(Kind k, long v) : kind_(k), value_(v) {}
  Kind kind_;
  Rational value_;
};

/// Sturm sequence p_0 = P, p_1 = P', p_{i+1} = -rem(p_{i-1}, p_i), each
/// element stored as a primitive integer polynomial with its sign intact.
class SturmChain {
 public:
  explicit SturmChain(const DensePoly& p);

  /// Sign variations of the chain at x, zeros skipped.
  [[nodiscard]] int variations(const Bound& x) const;
  /// Distinct real roots in (lo, hi]. Exact only when the source polynomial
  /// is square-free; count_real_roots() takes care of that.
  [[nodiscard]] int count(const Bound& lo, const Bound& hi) const;
  /// Last chain element: gcd(P, P') up to a nonzero constant.
  [[nodiscard]] const IntPoly& last() const { return chain_.back(); }
  [[nodiscard]] bool source_is_squarefree() const { return chain_.back().size() == 1; }
  [[nodiscard]] std::size_t size() const { return chain_.size(); }
  [[nodiscard]] const std::vector<IntPoly>& elements() const { return chain_; }

 private:
  std::vector<IntPoly> chain_;
};

struct SquarefreeFactor {
  DensePoly factor;
  unsigned multiplicity;
};

/// Primitive integer polynomial proportional to p with positive content
/// removed (sign of p preserved).
IntPoly primitive_part(const DensePoly& p);
DensePoly to_dense(const IntPoly& p);

/// Monic greatest common divisor over Q.
DensePoly gcd(const DensePoly& a, const DensePoly& b);
DensePoly squarefree_part(const DensePoly& p);
/// Yun's decomposition: p = c * prod factor_i^i with square-free, coprime factors.
std::vector<SquarefreeFactor> squarefree_decomposition(const DensePoly& p);

/// Number of distinct real roots in (lo, hi].
std::size_t count_real_roots(const DensePoly& p, const Bound& lo, const Bound& hi);
/// Real roots counted with multiplicity.
std::size_t count_real_roots_with_multiplicity(const DensePoly& p);

/// True iff every root of p is real (multiplicities included).
bool is_hyperbolic(const DensePoly& p);

/// Isolating interval: exactly one root r with lo < r <= hi.
struct RootInterval {
  Rational lo;
  Rational hi;
};

/// One interval per distinct real root, ascending. p must be square-free.
/// With max_width set, each interval is bisected until hi - lo <= max_width.
std::vector<RootInterval> isolate_roots(const DensePoly& p, const std::optional<Rational>& max_width = std::nullopt);
/// Same, restricted to roots in (lo, hi].
std::vector<RootInterval> isolate_roots_in(const DensePoly& p, const Rational& lo, const Rational& hi,
                                           const std::optional<Rational>& max_width = std::nullopt);

/// Roots all real, simple and strictly negative.
bool all_negative_and_simple(const DensePoly& p);

inline bool is_hyperbolic(const Polynomial& p) { return is_hyperbolic(p.dense()); }
inline bool is_hyperbolic(const SignedPolynomial& p) { return is_hyperbolic(p.dense()); }
inline bool all_negative_and_simple(const Polynomial& p) { return all_negative_and_simple(p.dense()); }
inline std::size_t count_real_roots(const Polynomial& p, const Bound& lo, const Bound& hi) {
  return count_real_roots(p.dense(), lo, hi);
}
inline std::size_t count_real_roots(const SignedPolynomial& p, const Bound& lo, const Bound& hi) {
  return count_real_roots(p.dense(), lo, hi);
}

}  // namespace hypq
