#include "hypq/explorer.hpp"

#include "hypq/criteria.hpp"
#include "hypq/lemma.hpp"
#include "hypq/sturm.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>
#include <tuple>

namespace hypq {

namespace {

std::vector<Rational> alternating(const Rational& first, const Rational& second, std::size_t degree) {
  std::vector<Rational> q;
  for (std::size_t k = 2; k <= degree; ++k) q.push_back(k % 2 == 0 ? first : second);
  return q;
}

std::mt19937_64 cell_rng(std::uint64_t seed, std::uint64_t cell) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(cell), static_cast<std::uint32_t>(cell >> 32)};
  return std::mt19937_64(seq);
}

bool row_less(const SweepRow& a, const SweepRow& b) {
  if (a.alpha != b.alpha) return a.alpha < b.alpha;
  if (a.beta != b.beta) return a.beta < b.beta;
  return std::tie(a.degree, a.sampler) < std::tie(b.degree, b.sampler);
}

template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) fn(i);
  };
  if (threads <= 1) {
    worker();
    return;
  }
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
}

}  // namespace

std::string_view sampler_name(Sampler s) {
  switch (s) {
    case Sampler::Constant: return "constant";
    case Sampler::Alternating: return "alternating";
    case Sampler::UniformRandom: return "uniform_random";
    case Sampler::EndpointExtremal: return "endpoint_extremal";
  }
  return "unknown";
}

Sampler parse_sampler(std::string_view name) {
  for (Sampler s : {Sampler::Constant, Sampler::Alternating, Sampler::UniformRandom, Sampler::EndpointExtremal}) {
    if (sampler_name(s) == name) return s;
  }
  throw InvalidArgument("unknown sampler '" + std::string(name) + "'");
}

void SweepConfig::validate() const {
  if (alpha_grid.empty() || beta_grid.empty()) throw InvalidArgument("sweep grids must be nonempty");
  if (degrees.empty()) throw InvalidArgument("sweep needs at least one degree");
  if (samples_per_cell == 0) throw InvalidArgument("samples_per_cell must be >= 1");
  if (denominator == 0) throw InvalidArgument("denominator must be positive");
  for (auto d : degrees) {
    if (d < 2 || d > kMaxDegree) throw InvalidArgument("sweep degrees must lie in 2..40");
  }
  for (const auto& a : alpha_grid) {
    if (a <= 0) throw InvalidArgument("alpha grid values must be positive");
  }
}

QuotientSequence draw_quotients(Sampler sampler, const Rational& alpha, const Rational& beta, std::size_t degree,
                                std::size_t index, std::size_t samples, std::mt19937_64& rng,
                                std::uint64_t denominator) {
  const std::size_t len = degree - 1;
  switch (sampler) {
    case Sampler::Constant: {
      Rational c = alpha;
      if (samples > 1) c += (beta - alpha) * Rational(static_cast<long>(index), static_cast<long>(samples - 1));
      c.canonicalize();
      return QuotientSequence(std::vector<Rational>(len, c));
    }
    case Sampler::Alternating:
      return QuotientSequence(index % 2 == 0 ? alternating(alpha, beta, degree) : alternating(beta, alpha, degree));
    case Sampler::UniformRandom: {
      std::uniform_int_distribution<std::uint64_t> dist(0, denominator);
      const Rational step = (beta - alpha) / Rational(Integer(std::to_string(denominator)));
      std::vector<Rational> q;
      q.reserve(len);
      for (std::size_t k = 0; k < len; ++k) {
        Rational v = alpha + step * Rational(Integer(std::to_string(dist(rng))));
        v.canonicalize();
        q.push_back(v);
      }
      return QuotientSequence(std::move(q));
    }
    case Sampler::EndpointExtremal:
      switch (index % 4) {
        case 0: return QuotientSequence(std::vector<Rational>(len, alpha));
        case 1: return QuotientSequence(std::vector<Rational>(len, beta));
        case 2: return QuotientSequence(alternating(alpha, beta, degree));
        default: return QuotientSequence(alternating(beta, alpha, degree));
      }
  }
  throw InvalidArgument("unknown sampler");
}

bool inside_theorem1_region(const Rational& alpha, const Rational& beta) {
  return threshold_check(alpha) && beta <= beta_bound(alpha);
}

bool inside_theorem_c_region(const Rational& alpha, const Rational& beta) {
  if (alpha < kTheoremCAlphaMin || alpha > 4 || beta < alpha) return false;
  return theorem_c_check(QuotientSequence({alpha, beta}), alpha);
}

std::string SweepReport::to_csv() const {
  std::ostringstream out;
  out << kSweepCsvHeader << '\n';
  for (const auto& r : rows) {
    out << to_string(r.alpha) << ',' << to_string(r.beta) << ',' << r.degree << ',' << sampler_name(r.sampler) << ','
        << r.n_samples << ',' << r.n_hyperbolic << ',' << (r.inside_t1 ? 1 : 0) << ',' << (r.inside_tc ? 1 : 0)
        << '\n';
  }
  return out.str();
}

SweepReport sweep(const SweepConfig& config) {
  config.validate();
  SweepReport report;
  for (const auto& a : config.alpha_grid) {
    for (const auto& b : config.beta_grid) {
      if (b < a) continue;
      for (auto d : config.degrees) {
        SweepRow row;
        row.alpha = a;
        row.beta = b;
        row.degree = d;
        row.sampler = config.sampler;
        row.n_samples = config.samples_per_cell;
        row.inside_t1 = inside_theorem1_region(a, b);
        row.inside_tc = inside_theorem_c_region(a, b);
        report.rows.push_back(std::move(row));
      }
    }
  }
  std::sort(report.rows.begin(), report.rows.end(), row_less);
  report.rows.erase(std::unique(report.rows.begin(), report.rows.end(),
                                [](const SweepRow& x, const SweepRow& y) { return !row_less(x, y) && !row_less(y, x); }),
                    report.rows.end());

  parallel_for(report.rows.size(), config.threads, [&](std::size_t i) {
    SweepRow& row = report.rows[i];
    auto rng = cell_rng(config.seed, i);
    for (std::size_t s = 0; s < row.n_samples; ++s) {
      const auto q = draw_quotients(row.sampler, row.alpha, row.beta, row.degree, s, row.n_samples, rng,
                                    config.denominator);
      if (is_hyperbolic(from_quotients(q, 1, 1))) ++row.n_hyperbolic;
    }
  });
  return report;
}

EmpiricalBeta empirical_beta(const Rational& alpha, std::size_t degree, const Rational& resolution, Sampler sampler,
                             const EmpiricalBetaOptions& options) {
  if (resolution <= 0) throw InvalidArgument("resolution must be positive");
  if (alpha <= 0) throw InvalidArgument("alpha must be positive");
  if (degree < 2) throw InvalidArgument("degree must be >= 2");
  if (options.samples == 0) throw InvalidArgument("samples must be >= 1");
  EmpiricalBeta out;
  auto all_hyperbolic = [&](const Rational& beta, std::uint64_t step) {
    auto rng = cell_rng(options.seed, step);
    for (std::size_t s = 0; s < options.samples; ++s) {
      const auto q = draw_quotients(sampler, alpha, beta, degree, s, options.samples, rng, options.denominator);
      if (!is_hyperbolic(from_quotients(q, 1, 1))) return false;
    }
    return true;
  };
  std::uint64_t step = 0;
  for (Rational beta = alpha; beta <= options.beta_max; beta += resolution, ++step) {
    if (!all_hyperbolic(beta, step)) return out;
    out.beta = beta;
  }
  out.capped = true;
  return out;
}

}  // namespace hypq
