#include "hypq/criteria.hpp"

#include "hypq/lemma.hpp"

#include <algorithm>

namespace hypq {

namespace {

Rational theorem_c_slack(const Rational& q, const Rational& alpha) {
  const Rational rhs = kTheoremCNumerator + q * alpha;
  return rhs * rhs - 4 * q * q * alpha;
}

Rational low_degree_discriminant(const Polynomial& p) {
  if (p.degree() == 2) return p[1] * p[1] - 4 * p[0] * p[2];
  const Rational& a = p[3];
  const Rational& b = p[2];
  const Rational& c = p[1];
  const Rational& d = p[0];
  return 18 * a * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * a * c * c * c - 27 * a * a * d * d;
}

}  // namespace

bool hutchinson_check(const QuotientSequence& q) {
  return std::all_of(q.values().begin(), q.values().end(), [](const Rational& v) { return v >= 4; });
}

bool interval_check(const QuotientSequence& q, const Rational& alpha) {
  if (q.degree() < 4) throw HypothesisError("Theorem 1 requires n >= 4");
  if (!threshold_check(alpha)) throw HypothesisError("alpha outside [1+sqrt(5), 4)");
  const Rational upper = beta_bound(alpha);
  return q.min() >= alpha && q.max() <= upper;
}

AlphaSearch find_alpha(const QuotientSequence& q) {
  if (q.degree() < 4) throw HypothesisError("Theorem 1 requires n >= 4");
  AlphaSearch out;
  if (hutchinson_check(q)) {
    out.hutchinson_applies = true;
    return out;
  }
  // beta_bound increases on (2, 4), so the largest admissible alpha is best.
  const Rational& lo = q.min();
  if (threshold_check(lo) && q.max() <= beta_bound(lo)) out.alpha = lo;
  return out;
}

bool theorem_c_check(const QuotientSequence& q, const Rational& alpha) {
  if (alpha < kTheoremCAlphaMin || alpha > 4) throw HypothesisError("Theorem C requires alpha in [3.43, 4]");
  for (const auto& v : q.values()) {
    if (v < alpha) return false;
    if (theorem_c_slack(v, alpha) < 0) return false;
  }
  return true;
}

std::optional<Rational> theorem_c_alpha(const QuotientSequence& q) {
  const Rational& lo = q.min();
  if (lo < kTheoremCAlphaMin) return std::nullopt;
  return lo < 4 ? lo : Rational(4);
}

CriterionReport certify(const Polynomial& p) {
  if (p.degree() < 2) throw InvalidArgument("no quotients defined for degree < 2");
  const QuotientSequence q = quotients(p);
  CriterionReport r;
  r.degree = p.degree();
  r.q_min = q.min();
  r.q_max = q.max();
  r.hutchinson = hutchinson_check(q);
  r.margins["hutchinson"] = r.q_min - 4;

  if (p.degree() >= 4) {
    const AlphaSearch search = find_alpha(q);
    if (search.alpha) {
      r.interval_alpha = search.alpha;
      r.interval_holds = interval_check(q, *search.alpha);
      r.margins["interval_lower"] = r.q_min - *search.alpha;
      r.margins["interval_upper"] = beta_bound(*search.alpha) - r.q_max;
    }
  } else {
    r.below_theorem1_degree = true;
    r.low_degree_discriminant = low_degree_discriminant(p);
    r.low_degree_hyperbolic = *r.low_degree_discriminant >= 0;
  }

  if (auto alpha = theorem_c_alpha(q)) {
    r.theorem_c_alpha = alpha;
    r.theorem_c_holds = theorem_c_check(q, *alpha);
    Rational slack = theorem_c_slack(q.values().front(), *alpha);
    for (const auto& v : q.values()) slack = std::min(slack, theorem_c_slack(v, *alpha));
    r.margins["theorem_c_upper"] = slack;
  }
  return r;
}

}  // namespace hypq
