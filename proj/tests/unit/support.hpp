#pragma once

#include "hypq/polynomial.hpp"

#include <random>
#include <vector>

namespace hypq::testing {

inline Rational R(const char* text) { return parse_rational(text); }

inline std::vector<Rational> Rs(std::initializer_list<const char*> items) {
  std::vector<Rational> out;
  for (const char* s : items) out.push_back(parse_rational(s));
  return out;
}

/// Random rational in [lo, hi] with denominator dividing `den`.
inline Rational random_rational(std::mt19937_64& rng, const Rational& lo, const Rational& hi, long den = 1000) {
  std::uniform_int_distribution<long> d(0, den);
  Rational r = lo + (hi - lo) * Rational(d(rng), den);
  r.canonicalize();
  return r;
}

inline QuotientSequence random_quotients(std::mt19937_64& rng, std::size_t degree, const Rational& lo,
                                         const Rational& hi, long den = 1000) {
  std::vector<Rational> q;
  for (std::size_t k = 2; k <= degree; ++k) q.push_back(random_rational(rng, lo, hi, den));
  return QuotientSequence(std::move(q));
}

/// Coefficients straight from the closed product formula
/// a_n = a_1 (a_1/a_0)^{n-1} / (q_2^{n-1} q_3^{n-2} ... q_n).
inline std::vector<Rational> closed_form_coefficients(const QuotientSequence& q, const Rational& a0,
                                                      const Rational& a1) {
  std::vector<Rational> c{a0, a1};
  for (std::size_t n = 2; n <= q.degree(); ++n) {
    Rational an = a1 * pow(a1 / a0, n - 1);
    for (std::size_t k = 2; k <= n; ++k) an /= pow(q.at(k), n - k + 1);
    c.push_back(an);
  }
  return c;
}

}  // namespace hypq::testing
