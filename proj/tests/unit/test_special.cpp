#include "hypq/lemma.hpp"
#include "hypq/special.hpp"
#include "hypq/sturm.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace hypq;
using hypq::testing::R;
using hypq::testing::Rs;

TEST_SUITE("special_functions") {
  TEST_CASE("theta sections have constant quotients") {
    for (const char* s : {"3", "16/5", "4", "7/3"}) {
      for (std::size_t n : {2, 3, 7, 20}) {
        const auto p = theta_section(R(s), n);
        CHECK(p.degree() == n);
        CHECK(quotients(p) == QuotientSequence(std::vector<Rational>(n - 1, R(s))));
      }
    }
    CHECK_THROWS_AS(theta_section(1, 5), InvalidArgument);
    CHECK_THROWS_AS(theta_section(3, 1), InvalidArgument);
  }

  TEST_CASE("exact square a^2 reproduces a^{-k^2} after rescaling") {
    // a = 2: g(z) = sum z^k 2^{-k^2}; T(x) = g(c x)/g(0) with c = a0/a1 = 2
    const auto p = theta_section(4, 6);
    for (std::size_t k = 0; k <= 6; ++k) CHECK(p[k] == pow(R("2"), k) / pow(R("2"), k * k));
  }

  TEST_CASE("threshold sandwich") {
    for (std::size_t n : {4, 6, 9}) {
      CHECK(is_hyperbolic(theta_section(4, n)));
    }
    CHECK_FALSE(is_hyperbolic(theta_section(3, 12)));
  }

  TEST_CASE("degree-4 threshold brackets 1 + sqrt 5") {
    const auto r = theta_threshold_search(4, R("1/10000"));
    CHECK(r.hyperbolic - r.non_hyperbolic <= R("1/10000"));
    CHECK_FALSE(at_least_one_plus_sqrt5(r.non_hyperbolic));
    CHECK(at_least_one_plus_sqrt5(r.hyperbolic));
    CHECK(r.monotone_consistent);
    CHECK(r.oracle_calls > 0);
    CHECK(is_hyperbolic(theta_section(r.hyperbolic, 4)));
    CHECK_FALSE(is_hyperbolic(theta_section(r.non_hyperbolic, 4)));
    CHECK(theta_threshold(4, R("1/10000")) == r.hyperbolic);
  }

  TEST_CASE("degree-8 threshold lies in (3, 4) near the reference constant") {
    const Rational t = theta_threshold(8, R("1/1000"));
    CHECK(R("3") < t);
    CHECK(t < R("4"));
    CHECK(std::abs(to_double(t) - kQInfinityReference) < 0.01);
    CHECK_THROWS_AS(theta_threshold(3, R("1/10")), InvalidArgument);
  }

  TEST_CASE("alternating quotients") {
    CHECK(alternating_quotients(R("7/2"), R("32/7"), 6) ==
          QuotientSequence(Rs({"7/2", "32/7", "7/2", "32/7", "7/2"})));
    const auto q = alternating_quotients(R("13/4"), R("6"), 11);
    for (std::size_t k = 2; k <= 11; ++k) CHECK(q.at(k) == (k % 2 == 0 ? R("13/4") : R("6")));
    CHECK_THROWS_AS(alternating_quotients(R("5"), R("4"), 6), InvalidArgument);
    CHECK_THROWS_AS(alternating_truncation(R("7/2"), R("4"), 3), InvalidArgument);
    CHECK(is_hyperbolic(alternating_truncation(R("7/2"), R("32/7"), 8)));
    const auto s = alternating_truncation_signed(R("7/2"), R("32/7"), 6);
    CHECK(s[0] == 1);
    CHECK(s[1] == -1);
  }

  TEST_CASE("first failing degrees") {
    // regression constants located by an oracle sweep
    const auto c = first_non_hyperbolic_degree([](std::size_t n) { return theta_section(R("16/5"), n); }, 4, 40);
    CHECK(c == 4);
    CHECK(first_non_hyperbolic_degree([](std::size_t n) { return theta_section(R("16/5"), n); }, 2, 40) == 2);
    const auto a = first_non_hyperbolic_degree(
        [](std::size_t n) { return alternating_truncation(R("13/4"), R("6"), n); }, 4, 20);
    CHECK(a == 4);
    CHECK_FALSE(first_non_hyperbolic_degree([](std::size_t n) { return theta_section(4, n); }, 4, 20).has_value());
  }
}
