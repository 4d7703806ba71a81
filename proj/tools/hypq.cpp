// hypq: command-line front end for the certification library.
//
// Exit codes: 0 certified hyperbolic, 10 inconclusive (or a certificate that
// fails verification), 11 non-hyperbolic per the Sturm oracle, 2 invalid
// input or unmet hypothesis, 3 search budget exhausted or internal error.

#include "hypq/criteria.hpp"
#include "hypq/explorer.hpp"
#include "hypq/json_io.hpp"
#include "hypq/lemma.hpp"
#include "hypq/special.hpp"
#include "hypq/sturm.hpp"
#include "hypq/witness.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

using namespace hypq;

enum Exit : int { kCertified = 0, kInvalid = 2, kBudget = 3, kInconclusive = 10, kNonHyperbolic = 11 };

std::string read_text(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

Json read_json(const std::string& path) {
  try {
    return Json::parse(read_text(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument("malformed JSON in '" + path + "': " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write '" + path + "'");
  out << text;
}

std::vector<Rational> parse_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw InvalidArgument("empty list '" + text + "'");
  return out;
}

Json envelope(const std::string& command, Json config) {
  return Json{{"tool", "hypq"}, {"version", HYPQ_VERSION}, {"command", command}, {"config", std::move(config)}};
}

// --- certify -----------------------------------------------------------------

struct CertifyArgs {
  std::string input = "-";
  std::string alpha;
  bool oracle = false;
  std::string report;
};

int run_certify(const CertifyArgs& a) {
  const Polynomial p = polynomial_from_json(read_json(a.input));
  CriterionReport r = certify(p);
  if (!a.alpha.empty()) {
    // An explicit alpha replaces the automatic choice for the interval criterion.
    const Rational alpha = parse_rational(a.alpha);
    r.interval_alpha = alpha;
    r.interval_holds = interval_check(quotients(p), alpha);
    r.margins["interval_lower"] = r.q_min - alpha;
    r.margins["interval_upper"] = beta_bound(alpha) - r.q_max;
  }
  Json doc = envelope("certify", {{"input", a.input}, {"alpha", a.alpha.empty() ? Json(nullptr) : Json(a.alpha)},
                                  {"oracle", a.oracle}});
  doc["polynomial"] = polynomial_to_json(p);
  doc["report"] = report_to_json(r);
  if (!r.below_theorem1_degree) doc["scope"] = "truncation only; no claim about an entire-function limit";

  int code = r.certified() ? kCertified : kInconclusive;
  if (a.oracle) {
    const bool h = is_hyperbolic(p);
    doc["oracle"] = {{"hyperbolic", h}, {"real_roots_with_multiplicity", count_real_roots_with_multiplicity(p.dense())}};
    if (r.certified() && !h) throw Error("criterion certified a polynomial the oracle rejects");
    code = h ? kCertified : kNonHyperbolic;
  }
  doc["exit_code"] = code;
  write_text(a.report, doc.dump(2) + "\n");
  return code;
}

// --- witness -----------------------------------------------------------------

struct WitnessArgs {
  std::string input = "-";
  std::string alpha;
  std::string out;
  std::string verify;
  bool signs_only = false;
  std::size_t budget = WitnessOptions{}.bisection_budget;
};

int run_witness(const WitnessArgs& a) {
  const Polynomial p = polynomial_from_json(read_json(a.input));
  if (p.degree() < 4) throw HypothesisError("Theorem 1 requires n >= 4");
  const Polynomial t = normalize(p);
  const SignedPolynomial Q = alternate(t);
  const QuotientSequence q = quotients(t);

  if (!a.verify.empty()) {
    auto cert = certificate_from_json(read_json(a.verify));
    const VerifyMode mode = a.signs_only ? VerifyMode::SignsOnly : cert.mode;
    const auto v = verify_certificate(Q, cert, mode);
    Json doc = envelope("witness", {{"input", a.input}, {"verify", a.verify},
                                    {"mode", mode == VerifyMode::Strict ? "strict" : "signs-only"}});
    doc["valid"] = v.valid;
    doc["failing_index"] = v.failing_index ? Json(*v.failing_index) : Json(nullptr);
    doc["reason"] = v.reason;
    std::cout << doc.dump(2) << "\n";
    if (!v.valid) std::cerr << "hypq: certificate rejected: " << v.reason << "\n";
    return v.valid ? kCertified : kInconclusive;
  }

  Rational alpha;
  if (!a.alpha.empty()) {
    alpha = parse_rational(a.alpha);
  } else {
    const auto found = find_alpha(q);
    if (!found.alpha) throw HypothesisError("no alpha in [1+sqrt(5), 4) fits the quotients");
    alpha = *found.alpha;
  }
  WitnessOptions opts;
  opts.bisection_budget = a.budget;
  auto cert = build_witness(Q, q, alpha, opts);
  if (a.signs_only) cert.mode = VerifyMode::SignsOnly;
  if (!verify_certificate(Q, cert, cert.mode)) throw Error("constructed certificate failed verification");
  Json doc = certificate_to_json(cert);
  doc["meta"] = envelope("witness", {{"input", a.input}, {"alpha", to_string(alpha)}, {"budget", a.budget}});
  doc["meta"]["certificate_for"] = "Q(x) = T(-x), T the normalized input";
  write_text(a.out, doc.dump(2) + "\n");
  return kCertified;
}

// --- oracle ------------------------------------------------------------------

int run_oracle(const std::string& input) {
  const Polynomial p = polynomial_from_json(read_json(input));
  const bool h = is_hyperbolic(p);
  Json doc = envelope("oracle", {{"input", input}});
  doc["degree"] = p.degree();
  doc["hyperbolic"] = h;
  doc["distinct_real_roots"] = count_real_roots(p, Bound::neg_inf(), Bound::pos_inf());
  doc["real_roots_with_multiplicity"] = count_real_roots_with_multiplicity(p.dense());
  doc["negative_and_simple"] = all_negative_and_simple(p);
  std::cout << doc.dump(2) << "\n";
  return h ? kCertified : kNonHyperbolic;
}

// --- gen ---------------------------------------------------------------------

struct GenArgs {
  std::string q;
  std::string a0 = "1";
  std::string a1 = "1";
  std::string out;
};

int run_gen(const GenArgs& a) {
  const Polynomial p = from_quotients(QuotientSequence(parse_list(a.q)), parse_rational(a.a0), parse_rational(a.a1));
  write_text(a.out, polynomial_to_json(p).dump() + "\n");
  return kCertified;
}

// --- theta -------------------------------------------------------------------

struct ThetaArgs {
  std::vector<std::size_t> degrees;
  std::string tol = "1/10000";
};

int run_theta(const ThetaArgs& a) {
  const Rational tol = parse_rational(a.tol);
  Json rows = Json::array();
  for (auto d : a.degrees) {
    const auto r = theta_threshold_search(d, tol);
    rows.push_back({{"degree", d},
                    {"threshold", to_string(r.hyperbolic)},
                    {"threshold_approx", to_double(r.hyperbolic)},
                    {"last_non_hyperbolic", to_string(r.non_hyperbolic)},
                    {"monotone_consistent", r.monotone_consistent},
                    {"oracle_calls", r.oracle_calls}});
  }
  Json doc = envelope("theta", {{"degrees", a.degrees}, {"tol", a.tol}});
  doc["thresholds"] = rows;
  doc["q_infinity_reference"] = kQInfinityReference;
  doc["note"] = "section thresholds by bisection with the Sturm oracle; q_infinity is the limit for the full series";
  std::cout << doc.dump(2) << "\n";
  return kCertified;
}

// --- lemma -------------------------------------------------------------------

struct LemmaArgs {
  std::string alpha;
  std::string beta;
  std::size_t resolution = 10;
};

int run_lemma(const LemmaArgs& a) {
  const IntervalSpec spec(parse_rational(a.alpha), parse_rational(a.beta));
  const auto r = evaluate_statement_a(spec, a.resolution);
  Json doc = envelope("lemma", {{"alpha", a.alpha}, {"beta", a.beta}, {"resolution", a.resolution}});
  doc["condition_b"] = condition_b(spec);
  doc["statement_a"] = r.holds;
  doc["grid_points_checked"] = r.grid_points_checked;
  doc["threshold"] = at_least_one_plus_sqrt5(spec.alpha);
  if (spec.alpha < 4) {
    doc["beta_bound"] = to_string(beta_bound(spec.alpha));
    doc["discriminant"] = to_string(reduced_discriminant(spec));
  }
  if (r.counterexample) {
    const auto& c = *r.counterexample;
    doc["counterexample"] = {to_string(c[0]), to_string(c[1]), to_string(c[2])};
  }
  std::cout << doc.dump(2) << "\n";
  return kCertified;
}

// --- sweep -------------------------------------------------------------------

struct SweepArgs {
  std::string alpha_grid;
  std::string beta_grid;
  std::vector<std::size_t> degrees;
  std::size_t samples = 1;
  std::string sampler = "constant";
  std::uint64_t seed = 0;
  unsigned threads = 0;
  std::string out;
};

int run_sweep(const SweepArgs& a) {
  SweepConfig c;
  c.alpha_grid = parse_list(a.alpha_grid);
  c.beta_grid = parse_list(a.beta_grid);
  c.degrees = a.degrees;
  c.samples_per_cell = a.samples;
  c.sampler = parse_sampler(a.sampler);
  c.seed = a.seed;
  c.threads = a.threads;
  write_text(a.out, sweep(c).to_csv());
  return kCertified;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact certification of real-rootedness from second quotients", "hypq"};
  app.set_version_flag("--version", std::string(HYPQ_VERSION));
  app.require_subcommand(1);

  CertifyArgs ca;
  auto* certify_cmd = app.add_subcommand("certify", "Run the sufficient criteria on a polynomial JSON document");
  certify_cmd->add_option("input", ca.input, "Polynomial JSON ('-' for stdin)");
  certify_cmd->add_option("--alpha", ca.alpha, "Use this alpha for the interval criterion");
  certify_cmd->add_flag("--oracle", ca.oracle, "Also decide hyperbolicity with the Sturm oracle");
  certify_cmd->add_option("--report", ca.report, "Write the report here instead of stdout");

  WitnessArgs wa;
  auto* witness_cmd = app.add_subcommand("witness", "Build or verify a sign-alternation certificate");
  witness_cmd->add_option("input", wa.input, "Polynomial JSON ('-' for stdin)");
  witness_cmd->add_option("--alpha", wa.alpha, "Interval parameter (default: q_min)");
  witness_cmd->add_option("--out", wa.out, "Certificate output path");
  witness_cmd->add_option("--verify", wa.verify, "Verify this certificate instead of building one");
  witness_cmd->add_flag("--signs-only", wa.signs_only, "Check sign alternation only, not windows");
  witness_cmd->add_option("--budget", wa.budget, "Bisection steps per window")->check(CLI::PositiveNumber);

  std::string oracle_input = "-";
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact Sturm root count");
  oracle_cmd->add_option("input", oracle_input, "Polynomial JSON ('-' for stdin)");

  GenArgs ga;
  auto* gen_cmd = app.add_subcommand("gen", "Polynomial from second quotients");
  gen_cmd->add_option("--q", ga.q, "Comma-separated quotients q_2,...,q_n")->required();
  gen_cmd->add_option("--a0", ga.a0, "Constant coefficient");
  gen_cmd->add_option("--a1", ga.a1, "Linear coefficient");
  gen_cmd->add_option("--out", ga.out, "Output path");

  ThetaArgs ta;
  auto* theta_cmd = app.add_subcommand("theta", "Hyperbolicity thresholds of partial theta sections");
  theta_cmd->add_option("--degree", ta.degrees, "Section degree (repeatable)")->required();
  theta_cmd->add_option("--tol", ta.tol, "Bisection tolerance");

  LemmaArgs la;
  auto* lemma_cmd = app.add_subcommand("lemma", "Evaluate the quartic gadget conditions for [alpha, beta]");
  lemma_cmd->add_option("--alpha", la.alpha)->required();
  lemma_cmd->add_option("--beta", la.beta)->required();
  lemma_cmd->add_option("--resolution", la.resolution, "Grid points per axis")->check(CLI::Range(2, 200));

  SweepArgs sa;
  auto* sweep_cmd = app.add_subcommand("sweep", "Parameter sweep to CSV");
  sweep_cmd->add_option("--alpha-grid", sa.alpha_grid, "Comma-separated alphas")->required();
  sweep_cmd->add_option("--beta-grid", sa.beta_grid, "Comma-separated betas")->required();
  sweep_cmd->add_option("--degrees", sa.degrees, "Degrees")->required()->delimiter(',');
  sweep_cmd->add_option("--samples", sa.samples, "Samples per cell");
  sweep_cmd->add_option("--sampler", sa.sampler, "constant | alternating | uniform_random | endpoint_extremal");
  sweep_cmd->add_option("--seed", sa.seed, "Random seed");
  sweep_cmd->add_option("--threads", sa.threads, "Worker threads (0 = all cores)");
  sweep_cmd->add_option("--out", sa.out, "CSV output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInvalid;
  }

  try {
    if (*certify_cmd) return run_certify(ca);
    if (*witness_cmd) return run_witness(wa);
    if (*oracle_cmd) return run_oracle(oracle_input);
    if (*gen_cmd) return run_gen(ga);
    if (*theta_cmd) return run_theta(ta);
    if (*lemma_cmd) return run_lemma(la);
    if (*sweep_cmd) return run_sweep(sa);
  } catch (const InvalidArgument& e) {
    std::cerr << "hypq: " << e.what() << "\n";
    return kInvalid;
  } catch (const BudgetExhausted& e) {
    std::cerr << "hypq: " << e.what() << "\n";
    return kBudget;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "hypq: bad document: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "hypq: internal error: " << e.what() << "\n";
    return kBudget;
  }
  return kInvalid;
}
