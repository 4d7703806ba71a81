#include "hypq/lemma.hpp"

#include "hypq/sturm.hpp"

#include <vector>

namespace hypq {

namespace {

constexpr int kFastPathSamples = 16;

std::vector<Rational> uniform_grid(const Rational& lo, const Rational& hi, std::size_t points) {
  if (lo == hi) return {lo};
  std::vector<Rational> g;
  g.reserve(points);
  for (std::size_t i = 0; i < points; ++i) {
    Rational v = lo + (hi - lo) * Rational(static_cast<long>(i), static_cast<long>(points - 1));
    v.canonicalize();
    g.push_back(v);
  }
  return g;
}

}  // namespace

IntervalSpec::IntervalSpec(Rational alpha_, Rational beta_) : alpha(std::move(alpha_)), beta(std::move(beta_)) {
  alpha.canonicalize();
  beta.canonicalize();
  if (alpha <= 0) throw InvalidArgument("interval spec needs alpha > 0");
  if (beta < alpha) throw InvalidArgument("interval spec needs alpha <= beta");
}

LemmaQuartic::LemmaQuartic(Rational q2, Rational q3, Rational q4)
    : q2_(std::move(q2)), q3_(std::move(q3)), q4_(std::move(q4)) {
  if (q2_ <= 0 || q3_ <= 0 || q4_ <= 0) throw InvalidArgument("gadget quotients must be positive");
  const Rational c2 = 1 / q2_;
  const Rational c3 = c2 * c2 / q3_;
  const Rational c4 = c3 * c3 / (c2 * q4_);
  poly_ = DensePoly({Rational(1), Rational(-1), c2, Rational(-c3), c4});
}

Rational beta_bound(const Rational& alpha) {
  if (alpha <= 0) throw InvalidArgument("beta_bound needs alpha > 0");
  if (alpha >= 4) throw InvalidArgument("bound undefined for alpha >= 4; no upper constraint needed");
  Rational b = 8 / (alpha * (4 - alpha));
  b.canonicalize();
  return b;
}

bool at_least_one_plus_sqrt5(const Rational& alpha) {
  const Rational shifted = alpha - 1;
  return shifted > 0 && shifted * shifted >= 5;
}

bool threshold_check(const Rational& alpha) { return alpha < 4 && at_least_one_plus_sqrt5(alpha); }

bool condition_b(const IntervalSpec& spec) {
  if (!at_least_one_plus_sqrt5(spec.alpha)) return false;
  return spec.alpha >= 4 || spec.beta <= beta_bound(spec.alpha);
}

LemmaQuartic extremal_quartic(const IntervalSpec& spec) { return {spec.alpha, spec.beta, spec.alpha}; }

Rational reduced_discriminant(const IntervalSpec& spec) {
  const Rational& a = spec.alpha;
  const Rational& b = spec.beta;
  Rational d = a * a * b - 4 * a * b + 8;
  d.canonicalize();
  return d;
}

std::optional<NonpositivePoint> find_nonpositive_point(const DensePoly& p, const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw InvalidArgument("search interval needs lo < hi");
  if (p.is_zero()) return NonpositivePoint{(lo + hi) / 2, (lo + hi) / 2};

  // Fast path: a coarse interior grid.
  for (int k = 1; k <= kFastPathSamples; ++k) {
    Rational x = lo + (hi - lo) * Rational(k, kFastPathSamples + 1);
    x.canonicalize();
    if (p(x) <= 0) return NonpositivePoint{x, x};
  }
  if (p.degree() == 0) return std::nullopt;

  // Without a root in (lo, hi), p keeps the sign seen on the grid (positive).
  const DensePoly sf = squarefree_part(p);
  const SturmChain chain(sf);
  for (RootInterval iv : isolate_roots_in(sf, lo, hi)) {
    if (sf(iv.hi) == 0) {
      if (iv.hi < hi) return NonpositivePoint{iv.hi, iv.hi};
      continue;  // root at the excluded endpoint
    }
    // The root is strictly inside (iv.lo, iv.hi); pull both ends inside (lo, hi).
    while (iv.lo == lo || iv.hi == hi) {
      Rational mid = (iv.lo + iv.hi) / 2;
      if (sf(mid) == 0) return NonpositivePoint{mid, mid};
      if (chain.count(iv.lo, mid) == 1) {
        iv.hi = mid;
      } else {
        iv.lo = mid;
      }
    }
    if (p(iv.lo) <= 0) return NonpositivePoint{iv.lo, iv.lo};
    if (p(iv.hi) <= 0) return NonpositivePoint{iv.hi, iv.hi};
    // Even multiplicity root with p > 0 around it: the only nonpositive value.
    return NonpositivePoint{iv.lo, iv.hi};
  }
  return std::nullopt;
}

std::optional<NonpositivePoint> has_nonpositive_point(const LemmaQuartic& s, const Rational& alpha) {
  if (alpha <= 1) throw InvalidArgument("has_nonpositive_point needs alpha > 1");
  return find_nonpositive_point(s.poly(), Rational(1), alpha);
}

bool positive_on_open_interval(const DensePoly& p, const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw InvalidArgument("interval needs lo < hi");
  if (p.is_zero()) return false;
  std::size_t roots = count_real_roots(p, lo, hi);
  if (p(hi) == 0) --roots;
  return roots == 0 && p((lo + hi) / 2) > 0;
}

StatementAReport evaluate_statement_a(const IntervalSpec& spec, std::size_t grid_resolution) {
  if (grid_resolution < 2) throw InvalidArgument("grid resolution must be at least 2");
  StatementAReport report;
  const Rational& alpha = spec.alpha;

  // (1, alpha) is empty: no gadget can have a point there.
  if (alpha <= 1) return report;

  // Reduction route. Below 1 + sqrt 5 the gadget S_{a,a,a} is positive on all
  // of R; at or above it, S_{a,b,a} dominates every gadget on (1, alpha).
  if (!at_least_one_plus_sqrt5(alpha)) {
    if (has_nonpositive_point(LemmaQuartic(alpha, alpha, alpha), alpha)) {
      throw Error("internal: S_{a,a,a} dips below zero for alpha < 1 + sqrt 5");
    }
    report.reduction_verdict = false;
  } else {
    report.reduction_verdict = has_nonpositive_point(extremal_quartic(spec), alpha).has_value();
  }

  // Direct route over the inclusive grid.
  const auto axis = uniform_grid(spec.alpha, spec.beta, grid_resolution);
  auto first_failure = [&]() -> std::optional<std::array<Rational, 3>> {
    for (const auto& q2 : axis) {
      for (const auto& q3 : axis) {
        for (const auto& q4 : axis) {
          ++report.grid_points_checked;
          if (!has_nonpositive_point(LemmaQuartic(q2, q3, q4), alpha)) return std::array<Rational, 3>{q2, q3, q4};
        }
      }
    }
    return std::nullopt;
  };
  report.counterexample = first_failure();
  report.holds = !report.counterexample.has_value();
  if (report.holds != report.reduction_verdict) {
    throw Error("statement (a): reduction route and grid route disagree for [" + to_string(spec.alpha) + ", " +
                to_string(spec.beta) + "]");
  }
  return report;
}

}  // namespace hypq
