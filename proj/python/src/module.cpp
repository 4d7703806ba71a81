// Python bindings. Rationals cross the boundary as strings ("p/q" or decimal);
// the hypq package converts them to fractions.Fraction.

#include "hypq/criteria.hpp"
#include "hypq/explorer.hpp"
#include "hypq/json_io.hpp"
#include "hypq/lemma.hpp"
#include "hypq/special.hpp"
#include "hypq/sturm.hpp"
#include "hypq/witness.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace hypq;

namespace {

using Strings = std::vector<std::string>;

std::vector<Rational> parse_all(const Strings& xs) {
  std::vector<Rational> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(parse_rational(x));
  return out;
}

template <class Range>
Strings format_all(const Range& xs) {
  Strings out;
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

Polynomial poly(const Strings& coeffs) { return Polynomial(parse_all(coeffs)); }

Bound bound(const std::optional<std::string>& v, bool upper) {
  if (!v) return upper ? Bound::pos_inf() : Bound::neg_inf();
  return Bound(parse_rational(*v));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact real-rootedness certification from second quotients";
  m.attr("__version__") = HYPQ_VERSION;

  static py::exception<Error> error(m, "Error", PyExc_RuntimeError);
  static py::exception<InvalidArgument> invalid(m, "InvalidArgument", PyExc_ValueError);
  static py::exception<HypothesisError> hypothesis(m, "HypothesisError", invalid.ptr());
  static py::exception<BudgetExhausted> budget(m, "BudgetExhausted", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const HypothesisError& e) {
      py::set_error(hypothesis, e.what());
    } catch (const InvalidArgument& e) {
      py::set_error(invalid, e.what());
    } catch (const BudgetExhausted& e) {
      py::set_error(budget, e.what());
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  m.def("quotients", [](const Strings& c) { return format_all(quotients(poly(c)).values()); }, py::arg("coeffs"));
  m.def("normalize", [](const Strings& c) { return format_all(normalize(poly(c)).coeffs()); }, py::arg("coeffs"));
  m.def(
      "from_quotients",
      [](const Strings& q, const std::string& a0, const std::string& a1) {
        return format_all(from_quotients(QuotientSequence(parse_all(q)), parse_rational(a0), parse_rational(a1)).coeffs());
      },
      py::arg("q"), py::arg("a0") = "1", py::arg("a1") = "1");

  m.def("is_hyperbolic", [](const Strings& c) { return is_hyperbolic(DensePoly(parse_all(c))); }, py::arg("coeffs"));
  m.def(
      "count_real_roots",
      [](const Strings& c, std::optional<std::string> lo, std::optional<std::string> hi) {
        return count_real_roots(DensePoly(parse_all(c)), bound(lo, false), bound(hi, true));
      },
      py::arg("coeffs"), py::arg("lo") = py::none(), py::arg("hi") = py::none());

  m.def("certify", [](const Strings& c) { return report_to_json(certify(poly(c))).dump(); }, py::arg("coeffs"));
  m.def(
      "build_witness",
      [](const Strings& c, std::optional<std::string> alpha, std::size_t budget) {
        const Polynomial t = normalize(poly(c));
        const auto q = quotients(t);
        Rational a;
        if (alpha) {
          a = parse_rational(*alpha);
        } else {
          const auto found = find_alpha(q);
          if (!found.alpha) throw HypothesisError("no alpha in [1+sqrt(5), 4) fits the quotients");
          a = *found.alpha;
        }
        WitnessOptions opts;
        opts.bisection_budget = budget;
        return certificate_to_json(build_witness(alternate(t), q, a, opts)).dump();
      },
      py::arg("coeffs"), py::arg("alpha") = py::none(), py::arg("budget") = 200);
  m.def(
      "verify_certificate",
      [](const Strings& c, const std::string& cert_json, bool signs_only) {
        const auto cert = certificate_from_json(Json::parse(cert_json));
        const auto v = verify_certificate(alternate(normalize(poly(c))), cert,
                                          signs_only ? VerifyMode::SignsOnly : VerifyMode::Strict);
        return py::make_tuple(v.valid, v.failing_index ? py::cast(*v.failing_index) : py::none(), v.reason);
      },
      py::arg("coeffs"), py::arg("certificate"), py::arg("signs_only") = false);

  m.def("beta_bound", [](const std::string& a) { return to_string(beta_bound(parse_rational(a))); }, py::arg("alpha"));
  m.def(
      "condition_b",
      [](const std::string& a, const std::string& b) {
        return condition_b(IntervalSpec(parse_rational(a), parse_rational(b)));
      },
      py::arg("alpha"), py::arg("beta"));
  m.def(
      "lemma_statement_a",
      [](const std::string& a, const std::string& b, std::size_t res) {
        return lemma_statement_a(IntervalSpec(parse_rational(a), parse_rational(b)), res);
      },
      py::arg("alpha"), py::arg("beta"), py::arg("resolution") = 10);

  m.def(
      "theta_section", [](const std::string& s, std::size_t n) { return format_all(theta_section(parse_rational(s), n).coeffs()); },
      py::arg("a_squared"), py::arg("degree"));
  m.def(
      "theta_threshold",
      [](std::size_t n, const std::string& tol) {
        py::gil_scoped_release release;
        return to_string(theta_threshold(n, parse_rational(tol)));
      },
      py::arg("degree"), py::arg("tol") = "1/10000");

  m.def(
      "sweep",
      [](const Strings& alphas, const Strings& betas, const std::vector<std::size_t>& degrees, std::size_t samples,
         const std::string& sampler, std::uint64_t seed, unsigned threads) {
        SweepConfig c;
        c.alpha_grid = parse_all(alphas);
        c.beta_grid = parse_all(betas);
        c.degrees = degrees;
        c.samples_per_cell = samples;
        c.sampler = parse_sampler(sampler);
        c.seed = seed;
        c.threads = threads;
        py::gil_scoped_release release;
        return sweep(c).to_csv();
      },
      py::arg("alpha_grid"), py::arg("beta_grid"), py::arg("degrees"), py::arg("samples") = 1,
      py::arg("sampler") = "constant", py::arg("seed") = 0, py::arg("threads") = 0);
}
