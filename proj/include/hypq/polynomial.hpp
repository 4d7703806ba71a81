#pragma once

/**
 * @file polynomial.hpp
 * @brief Exact polynomials with positive coefficients, their second
 *        quotients, normalization and sections.
 *
 * Three representations live here:
 *  - DensePoly: an arbitrary rational polynomial (any signs), used by the
 *    oracle and for general arithmetic.
 *  - Polynomial: coefficients a_0..a_n, all strictly positive, n >= 1.
 *  - SignedPolynomial: coefficients (-1)^k a_k with a_k > 0, i.e. P(-x).
 *
 * Coefficient vectors are stored lowest degree first.
 */

#include "hypq/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace hypq {

class DensePoly {
 public:
  DensePoly() = default;
  explicit DensePoly(std::vector<Rational> coeffs);

  /// Degree of the zero polynomial is -1.
  [[nodiscard]] long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] std::span<const Rational> coeffs() const { return coeffs_; }
  [[nodiscard]] const Rational& operator[](std::size_t k) const { return coeffs_[k]; }
  [[nodiscard]] const Rational& leading() const { return coeffs_.back(); }

  [[nodiscard]] Rational operator()(const Rational& x) const;
  [[nodiscard]] DensePoly derivative() const;
  [[nodiscard]] DensePoly monic() const;

  friend DensePoly operator+(const DensePoly& a, const DensePoly& b);
  friend DensePoly operator-(const DensePoly& a, const DensePoly& b);
  friend DensePoly operator*(const DensePoly& a, const DensePoly& b);
  friend DensePoly operator*(const Rational& c, const DensePoly& a);
  friend bool operator==(const DensePoly& a, const DensePoly& b) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder of polynomial long division over Q.
struct DivMod {
  DensePoly quotient;
  DensePoly remainder;
};
DivMod divmod(const DensePoly& dividend, const DensePoly& divisor);

/// Second quotients q_2..q_n with q_k = a_{k-1}^2 / (a_{k-2} a_k).
class QuotientSequence {
 public:
  QuotientSequence() = default;
  explicit QuotientSequence(std::vector<Rational> values);

  /// q_k for 2 <= k <= degree().
  [[nodiscard]] const Rational& at(std::size_t k) const;
  [[nodiscard]] std::span<const Rational> values() const { return values_; }
  [[nodiscard]] std::size_t size() const { return values_.size(); }
  /// Degree of the polynomial these quotients describe.
  [[nodiscard]] std::size_t degree() const { return values_.size() + 1; }
  [[nodiscard]] const Rational& min() const;
  [[nodiscard]] const Rational& max() const;
  /// q_{from} * q_{from+1} * ... * q_{to}; the empty product is 1.
  [[nodiscard]] Rational product(std::size_t from, std::size_t to) const;

  friend bool operator==(const QuotientSequence&, const QuotientSequence&) = default;

 private:
  std::vector<Rational> values_;
};

class Polynomial {
 public:
  explicit Polynomial(std::vector<Rational> coeffs);

  [[nodiscard]] std::size_t degree() const { return coeffs_.size() - 1; }
  [[nodiscard]] std::span<const Rational> coeffs() const { return coeffs_; }
  [[nodiscard]] const Rational& operator[](std::size_t k) const { return coeffs_[k]; }
  [[nodiscard]] bool is_normalized() const { return coeffs_[0] == 1 && coeffs_[1] == 1; }
  [[nodiscard]] DensePoly dense() const { return DensePoly(coeffs_); }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Rational> coeffs_;
};

class SignedPolynomial {
 public:
  /// Takes the full signed coefficients; signs must be exactly (-1)^k.
  explicit SignedPolynomial(std::vector<Rational> coeffs);

  [[nodiscard]] std::size_t degree() const { return coeffs_.size() - 1; }
  [[nodiscard]] std::span<const Rational> coeffs() const { return coeffs_; }
  [[nodiscard]] const Rational& operator[](std::size_t k) const { return coeffs_[k]; }
  /// |coefficient k|.
  [[nodiscard]] Rational magnitude(std::size_t k) const { return abs(coeffs_[k]); }
  [[nodiscard]] DensePoly dense() const { return DensePoly(coeffs_); }
  /// Second quotients of the magnitudes (identical to those of the source).
  [[nodiscard]] QuotientSequence quotients() const;

  friend bool operator==(const SignedPolynomial&, const SignedPolynomial&) = default;

 private:
  std::vector<Rational> coeffs_;
};

QuotientSequence quotients(const Polynomial& p);

/// T(x) = a_0^{-1} P(a_0 a_1^{-1} x); the result has a_0 = a_1 = 1.
Polynomial normalize(const Polynomial& p);

/// Rebuilds coefficients from quotients and the two leading terms a_0, a_1.
Polynomial from_quotients(const QuotientSequence& q, const Rational& a0, const Rational& a1);

/// P(-x) for a normalized P.
SignedPolynomial alternate(const Polynomial& p);

/// Consecutive-term section sum_{k=m}^{n} a_k x^k with x^m factored out.
struct Section {
  Polynomial poly;
  std::size_t shift;  // m: multiplicity of the removed root at 0
};
Section section(const Polynomial& p, std::size_t m, std::size_t n);

Rational evaluate(const Polynomial& p, const Rational& x);
Rational evaluate(const SignedPolynomial& p, const Rational& x);
Rational evaluate(const DensePoly& p, const Rational& x);

}  // namespace hypq
