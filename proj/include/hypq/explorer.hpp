#pragma once

/**
 * @file explorer.hpp
 * @brief Parameter sweeps over quotient intervals [alpha, beta]: draw quotient
 *        sequences, build polynomials, ask the oracle, tally.
 *
 * Runs are deterministic for a fixed seed regardless of thread count: every
 * cell derives its own generator from (seed, cell index) and rows are sorted
 * before emission.
 */

#include "hypq/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace hypq {

enum class Sampler { Constant, Alternating, UniformRandom, EndpointExtremal };

std::string_view sampler_name(Sampler s);
Sampler parse_sampler(std::string_view name);

struct SweepConfig {
  std::vector<Rational> alpha_grid;
  std::vector<Rational> beta_grid;
  std::vector<std::size_t> degrees;
  std::size_t samples_per_cell = 1;
  Sampler sampler = Sampler::Constant;
  std::uint64_t seed = 0;
  /// Random quotients lie on the grid alpha + (beta - alpha) m / denominator.
  std::uint64_t denominator = 1'000'000;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;

  /// Throws InvalidArgument on empty grids, zero samples or degrees outside 2..max_degree.
  void validate() const;
  static constexpr std::size_t kMaxDegree = 40;
};

struct SweepRow {
  Rational alpha;
  Rational beta;
  std::size_t degree = 0;
  Sampler sampler = Sampler::Constant;
  std::size_t n_samples = 0;
  std::size_t n_hyperbolic = 0;
  bool inside_t1 = false;
  bool inside_tc = false;
};

struct SweepReport {
  std::vector<SweepRow> rows;
  [[nodiscard]] std::string to_csv() const;
};

inline constexpr std::string_view kSweepCsvHeader = "alpha,beta,degree,sampler,n_samples,n_hyperbolic,inside_t1,inside_tc";

/// Draws sample number `index` for a cell. Every entry lies in [alpha, beta].
QuotientSequence draw_quotients(Sampler sampler, const Rational& alpha, const Rational& beta, std::size_t degree,
                                std::size_t index, std::size_t samples, std::mt19937_64& rng,
                                std::uint64_t denominator);

/// Theorem 1 region: 1 + sqrt 5 <= alpha < 4 and beta <= 8/(alpha(4 - alpha)).
bool inside_theorem1_region(const Rational& alpha, const Rational& beta);
/// Theorem C region: alpha in [3.43, 4] and beta (2 sqrt(alpha) - alpha) <= 0.95.
bool inside_theorem_c_region(const Rational& alpha, const Rational& beta);

SweepReport sweep(const SweepConfig& config);

struct EmpiricalBetaOptions {
  std::size_t samples = 16;
  std::uint64_t seed = 0;
  Rational beta_max{8};
  std::uint64_t denominator = 1'000'000;
};

struct EmpiricalBeta {
  /// Largest scanned beta with every sample hyperbolic; none when beta = alpha already fails.
  std::optional<Rational> beta;
  /// The scan reached beta_max without a failure.
  bool capped = false;
};

/// Scans beta = alpha + k * resolution upward and stops at the first beta for
/// which some sampled sequence in [alpha, beta] is not hyperbolic.
EmpiricalBeta empirical_beta(const Rational& alpha, std::size_t degree, const Rational& resolution, Sampler sampler,
                             const EmpiricalBetaOptions& options = {});

}  // namespace hypq
