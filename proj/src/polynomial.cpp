#include "hypq/polynomial.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace hypq {

namespace {

Rational horner(std::span<const Rational> c, const Rational& x) {
  Rational acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

}  // namespace

// ---------------------------------------------------------------- DensePoly

DensePoly::DensePoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

void DensePoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational DensePoly::operator()(const Rational& x) const { return horner(coeffs_, x); }

DensePoly DensePoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
  return DensePoly(std::move(d));
}

DensePoly DensePoly::monic() const {
  if (is_zero()) return {};
  return (1 / leading()) * *this;
}

DensePoly operator+(const DensePoly& a, const DensePoly& b) {
  std::vector<Rational> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) r[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) r[k] += b.coeffs_[k];
  return DensePoly(std::move(r));
}

DensePoly operator-(const DensePoly& a, const DensePoly& b) { return a + Rational(-1) * b; }

DensePoly operator*(const DensePoly& a, const DensePoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return DensePoly(std::move(r));
}

DensePoly operator*(const Rational& c, const DensePoly& a) {
  std::vector<Rational> r(a.coeffs_);
  for (auto& x : r) x *= c;
  return DensePoly(std::move(r));
}

DivMod divmod(const DensePoly& dividend, const DensePoly& divisor) {
  if (divisor.is_zero()) throw InvalidArgument("division by the zero polynomial");
  std::vector<Rational> rem(dividend.coeffs().begin(), dividend.coeffs().end());
  const long db = divisor.degree();
  if (dividend.degree() < db) return {DensePoly{}, dividend};
  std::vector<Rational> quo(static_cast<std::size_t>(dividend.degree() - db + 1));
  const Rational& lead = divisor.leading();
  for (long k = dividend.degree(); k >= db; --k) {
    Rational c = rem[static_cast<std::size_t>(k)] / lead;
    if (c == 0) continue;
    quo[static_cast<std::size_t>(k - db)] = c;
    for (long i = 0; i <= db; ++i) rem[static_cast<std::size_t>(k - db + i)] -= c * divisor[static_cast<std::size_t>(i)];
  }
  return {DensePoly(std::move(quo)), DensePoly(std::move(rem))};
}

// --------------------------------------------------------- QuotientSequence

QuotientSequence::QuotientSequence(std::vector<Rational> values) : values_(std::move(values)) {
  if (values_.empty()) throw InvalidArgument("quotient sequence must be nonempty");
  for (auto& q : values_) {
    q.canonicalize();
    if (q <= 0) throw InvalidArgument("second quotients must be positive, got " + to_string(q));
  }
}

const Rational& QuotientSequence::at(std::size_t k) const {
  if (k < 2 || k > degree()) {
    throw InvalidArgument("quotient index " + std::to_string(k) + " outside 2.." + std::to_string(degree()));
  }
  return values_[k - 2];
}

const Rational& QuotientSequence::min() const { return *std::min_element(values_.begin(), values_.end()); }
const Rational& QuotientSequence::max() const { return *std::max_element(values_.begin(), values_.end()); }

Rational QuotientSequence::product(std::size_t from, std::size_t to) const {
  Rational p = 1;
  for (std::size_t k = from; k <= to; ++k) p *= at(k);
  return p;
}

// ------------------------------------------------------ Polynomial families

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 2) throw InvalidArgument("polynomial must have degree >= 1");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    coeffs_[k].canonicalize();
    if (coeffs_[k] <= 0) {
      throw InvalidArgument("coefficient a_" + std::to_string(k) + " = " + to_string(coeffs_[k]) + " is not positive");
    }
  }
}

SignedPolynomial::SignedPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 2) throw InvalidArgument("polynomial must have degree >= 1");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    coeffs_[k].canonicalize();
    const int expected = (k % 2 == 0) ? 1 : -1;
    if (sgn(coeffs_[k]) != expected) {
      throw InvalidArgument("coefficient " + std::to_string(k) + " breaks the alternating sign pattern");
    }
  }
}

QuotientSequence SignedPolynomial::quotients() const {
  if (degree() < 2) throw InvalidArgument("no quotients defined for degree < 2");
  std::vector<Rational> q;
  q.reserve(degree() - 1);
  for (std::size_t k = 2; k <= degree(); ++k) q.push_back(coeffs_[k - 1] * coeffs_[k - 1] / (coeffs_[k - 2] * coeffs_[k]));
  return QuotientSequence(std::move(q));
}

QuotientSequence quotients(const Polynomial& p) {
  if (p.degree() < 2) throw InvalidArgument("no quotients defined for degree < 2");
  std::vector<Rational> q;
  q.reserve(p.degree() - 1);
  for (std::size_t k = 2; k <= p.degree(); ++k) q.push_back(p[k - 1] * p[k - 1] / (p[k - 2] * p[k]));
  return QuotientSequence(std::move(q));
}

Polynomial normalize(const Polynomial& p) {
  // coefficient k of T is a_k a_0^{k-1} / a_1^k
  const Rational ratio = p[0] / p[1];
  std::vector<Rational> c(p.degree() + 1);
  Rational scale = 1 / p[0];
  for (std::size_t k = 0; k <= p.degree(); ++k) {
    c[k] = p[k] * scale;
    scale *= ratio;
  }
  return Polynomial(std::move(c));
}

Polynomial from_quotients(const QuotientSequence& q, const Rational& a0, const Rational& a1) {
  if (a0 <= 0 || a1 <= 0) throw InvalidArgument("a_0 and a_1 must be positive");
  std::vector<Rational> c;
  c.reserve(q.degree() + 1);
  c.push_back(a0);
  c.push_back(a1);
  for (std::size_t k = 2; k <= q.degree(); ++k) c.push_back(c[k - 1] * c[k - 1] / (c[k - 2] * q.at(k)));
  return Polynomial(std::move(c));
}

SignedPolynomial alternate(const Polynomial& p) {
  if (!p.is_normalized()) throw InvalidArgument("alternate() requires a normalized polynomial (a_0 = a_1 = 1)");
  std::vector<Rational> c(p.coeffs().begin(), p.coeffs().end());
  for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
  return SignedPolynomial(std::move(c));
}

Section section(const Polynomial& p, std::size_t m, std::size_t n) {
  if (m >= n) throw InvalidArgument("section requires m < n");
  if (n > p.degree()) throw InvalidArgument("section end exceeds the degree");
  std::vector<Rational> c(p.coeffs().begin() + static_cast<long>(m), p.coeffs().begin() + static_cast<long>(n) + 1);
  return {Polynomial(std::move(c)), m};
}

Rational evaluate(const Polynomial& p, const Rational& x) { return horner(p.coeffs(), x); }
Rational evaluate(const SignedPolynomial& p, const Rational& x) { return horner(p.coeffs(), x); }
Rational evaluate(const DensePoly& p, const Rational& x) { return p(x); }

}  // namespace hypq
