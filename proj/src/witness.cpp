#include "hypq/witness.hpp"

#include "hypq/criteria.hpp"
#include "hypq/lemma.hpp"
#include "hypq/sturm.hpp"

#include <cmath>
#include <string>

namespace hypq {

namespace {

constexpr int kWindowGridSamples = 32;

int parity_sign(std::size_t k) { return (k % 2 == 0) ? 1 : -1; }

/// (-1)^{j-1} Q as a dense polynomial.
DensePoly oriented(const SignedPolynomial& Q, std::size_t j) {
  return parity_sign(j - 1) > 0 ? Q.dense() : Rational(-1) * Q.dense();
}

bool low_regime(std::size_t n, std::size_t j) { return j <= n / 2; }

void check_index(std::size_t n, std::size_t j) {
  if (j < 1 || j + 1 > n) throw InvalidArgument("window index " + std::to_string(j) + " outside 1.." + std::to_string(n - 1));
}

/// Rational close to v lying strictly inside (lo, hi), or none.
std::optional<Rational> rational_near(double v, const Rational& lo, const Rational& hi) {
  if (!std::isfinite(v)) return std::nullopt;
  const double tol = std::max(1e-9, std::abs(v) * 1e-7);
  Rational r = simplest_between(from_double(v - tol), from_double(v + tol));
  if (!(lo < r && r < hi)) return std::nullopt;
  return r;
}

/// Seed from the gadget: map the vertex w_v = a sqrt(b) / 2 of the reduced
/// quadratic back through w = t + 1/t and u = a sqrt(b) t, where (a, b) are the
/// first two gadget quotients, then u to x through the window's scaling.
std::optional<Rational> vertex_seed(const QuotientSequence& q, std::size_t j, const Window& w) {
  const std::size_t n = q.degree();
  const bool low = low_regime(n, j);
  const double a = to_double(q.at(j + 1));
  const double b = to_double(low ? (j + 2 <= n ? q.at(j + 2) : q.at(n)) : q.at(j));
  const double wv = a * std::sqrt(b) / 2;
  if (wv <= 2) return std::nullopt;
  const double t = (wv - std::sqrt(wv * wv - 4)) / 2;
  const double u = a * std::sqrt(b) * t;  // gadget variable, expected in (1, a)
  const double x = low ? to_double(q.product(2, j)) * u : to_double(q.product(2, j + 1)) / u;
  return rational_near(x, w.lo, w.hi);
}

}  // namespace

std::vector<Window> windows(const QuotientSequence& q) {
  std::vector<Window> out;
  Rational lo = 1;
  for (std::size_t j = 1; j < q.degree(); ++j) {
    Rational hi = lo * q.at(j + 1);
    out.push_back({lo, hi});
    lo = hi;
  }
  return out;
}

WindowDecomposition decompose(const SignedPolynomial& Q, const QuotientSequence& q, std::size_t j, const Rational& x) {
  const std::size_t n = Q.degree();
  if (q.degree() != n) throw InvalidArgument("quotient sequence does not match the polynomial degree");
  check_index(n, j);
  if (x <= 0) throw InvalidArgument("decompose needs x > 0");

  WindowDecomposition d;
  if (low_regime(n, j)) {
    d.g_first = j - 1;
    d.g_last = std::min(j + 3, n);
  } else {
    d.g_first = j >= 3 ? j - 3 : 0;
    d.g_last = j + 1;
  }
  const int orient = parity_sign(j - 1);
  Rational power = 1;
  for (std::size_t k = 0; k <= n; ++k) {
    const Rational term = orient * Q[k] * power;
    if (k < d.g_first) {
      d.sigma1 += term;
      d.sigma1_empty = false;
    } else if (k <= d.g_last) {
      d.g += term;
    } else {
      d.sigma2 += term;
      d.sigma2_empty = false;
    }
    power *= x;
  }
  return d;
}

bool window_monotonicity(const QuotientSequence& q, std::size_t j, const Rational& x) {
  const std::size_t n = q.degree();
  check_index(n, j);
  if (!windows(q)[j - 1].contains(x)) throw InvalidArgument("x lies outside window " + std::to_string(j));
  const Polynomial t = from_quotients(q, 1, 1);
  Rational power = 1;
  std::vector<Rational> mag;
  for (std::size_t k = 0; k <= n; ++k) {
    mag.push_back(t[k] * power);
    power *= x;
  }
  for (std::size_t k = 1; k <= j; ++k) {
    if (!(mag[k - 1] < mag[k])) return false;
  }
  for (std::size_t k = j + 1; k <= n; ++k) {
    if (!(mag[k - 1] > mag[k])) return false;
  }
  return true;
}

std::optional<Rational> find_window_witness(const SignedPolynomial& Q, const QuotientSequence& q, std::size_t j,
                                            const WitnessOptions& options) {
  const std::size_t n = Q.degree();
  check_index(n, j);
  const Window w = windows(q)[j - 1];
  const DensePoly f = oriented(Q, j);
  auto good = [&](const Rational& x) { return w.contains(x) && f(x) < 0; };

  if (auto seed = vertex_seed(q, j, w); seed && good(*seed)) return seed;

  // For n = 4, j = 2 the bracket is majorized by the quartic gadget
  // S_{q3, q4, q4}(y) with x = q2 y; its minimizer is the next seed.
  if (n == 4 && j == 2) {
    const LemmaQuartic gadget(q.at(3), q.at(4), q.at(4));
    if (auto pt = find_nonpositive_point(gadget.poly(), Rational(1), q.at(3))) {
      const Rational x = q.at(2) * pt->representative();
      if (good(x)) return x;
    }
  }

  for (int k = 1; k <= kWindowGridSamples; ++k) {
    Rational x = w.lo + (w.hi - w.lo) * Rational(k, kWindowGridSamples + 1);
    x.canonicalize();
    if (f(x) < 0) return x;
  }

  // Refine the critical points of f inside the window; the minimum of f
  // there is attained at one of them.
  const DensePoly df = f.derivative();
  if (df.is_zero()) return std::nullopt;
  const DensePoly crit = squarefree_part(df);
  const SturmChain chain(crit);
  auto brackets = isolate_roots_in(crit, w.lo, w.hi);
  std::size_t steps = 0;
  while (steps < options.bisection_budget && !brackets.empty()) {
    for (auto& iv : brackets) {
      for (const Rational* x : {&iv.lo, &iv.hi}) {
        if (good(*x)) return *x;
      }
      Rational mid = (iv.lo + iv.hi) / 2;
      if (good(mid)) return mid;
      if (crit(mid) == 0) {
        // Exact critical point that is not a witness; nudge both ways.
        iv.lo = mid;
        iv.hi = mid + (iv.hi - mid) / 2;
      } else if (chain.count(iv.lo, mid) == 1) {
        iv.hi = mid;
      } else {
        iv.lo = mid;
      }
      if (++steps >= options.bisection_budget) break;
    }
  }
  return std::nullopt;
}

SignAlternationCertificate build_witness(const SignedPolynomial& Q, const QuotientSequence& q, const Rational& alpha,
                                         const WitnessOptions& options) {
  const std::size_t n = Q.degree();
  if (n < 4) throw HypothesisError("Theorem 1 requires n >= 4");
  if (q.degree() != n) throw InvalidArgument("quotient sequence does not match the polynomial degree");
  if (Q.quotients() != q) throw InvalidArgument("quotient sequence does not belong to the polynomial");
  if (Q[1] != -1 || Q[0] != 1) throw InvalidArgument("polynomial is not normalized");
  if (!interval_check(q, alpha)) throw HypothesisError("quotients leave [alpha, 8/(alpha(4-alpha))]");

  SignAlternationCertificate cert;
  cert.windows = windows(q);
  for (std::size_t j = 1; j < n; ++j) {
    auto x = find_window_witness(Q, q, j, options);
    if (!x) throw BudgetExhausted("witness search exhausted in window " + std::to_string(j));
    cert.points.push_back(*x);
  }
  return cert;
}

VerificationResult verify_certificate(const SignedPolynomial& Q, const SignAlternationCertificate& cert,
                                      VerifyMode mode) {
  const std::size_t n = Q.degree();
  VerificationResult res;
  auto fail = [&](std::optional<std::size_t> j, std::string why) {
    res.valid = false;
    res.failing_index = j;
    res.reason = std::move(why);
    return res;
  };
  if (cert.points.size() != n - 1) {
    return fail(std::nullopt, "expected " + std::to_string(n - 1) + " points, got " + std::to_string(cert.points.size()));
  }
  if (!(Q[0] > 0)) return fail(std::nullopt, "Q(0) is not positive");
  if (parity_sign(n) * sgn(Q[n]) <= 0) return fail(std::nullopt, "(-1)^n Q(+inf) is not positive");

  std::vector<Window> expected;
  if (mode == VerifyMode::Strict) {
    if (n < 2) return fail(std::nullopt, "no windows for degree < 2");
    expected = windows(Q.quotients());
    if (cert.windows != expected) return fail(std::nullopt, "window bounds do not match the polynomial");
  }

  Rational prev = 0;
  for (std::size_t j = 1; j < n; ++j) {
    const Rational& x = cert.points[j - 1];
    if (!(x > prev)) return fail(j, "points are not strictly increasing from 0");
    if (mode == VerifyMode::Strict && !expected[j - 1].contains(x)) return fail(j, "point outside its window");
    if (!(parity_sign(j - 1) * evaluate(Q, x) < 0)) return fail(j, "sign does not alternate");
    prev = x;
  }
  res.valid = true;
  return res;
}

}  // namespace hypq
