#include "hypq/sturm.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace hypq;
using hypq::testing::R;
using hypq::testing::Rs;

namespace {

// Product of (x - r_i)^{m_i} times (x^2 + c_j), c_j > 0: the real roots are known by construction.
struct Built {
  DensePoly poly;
  std::vector<Rational> roots;       // distinct
  std::vector<unsigned> multiplicity;
};

Built build(std::mt19937_64& rng, std::size_t n_roots, std::size_t n_complex) {
  Built b{DensePoly(std::vector<Rational>{1}), {}, {}};
  std::set<Rational> seen;
  std::uniform_int_distribution<int> mult(1, 3);
  while (b.roots.size() < n_roots) {
    const Rational r = hypq::testing::random_rational(rng, R("-10"), R("10"), 60);
    if (!seen.insert(r).second) continue;
    const unsigned m = static_cast<unsigned>(mult(rng));
    b.roots.push_back(r);
    b.multiplicity.push_back(m);
    for (unsigned i = 0; i < m; ++i) b.poly = b.poly * DensePoly(std::vector<Rational>{-r, 1});
  }
  for (std::size_t j = 0; j < n_complex; ++j) {
    const Rational c = hypq::testing::random_rational(rng, R("1/10"), R("9"), 70);
    const Rational shift = hypq::testing::random_rational(rng, R("-3"), R("3"), 7);
    // (x - shift)^2 + c
    b.poly = b.poly * DensePoly(std::vector<Rational>{shift * shift + c, -2 * shift, 1});
  }
  return b;
}

}  // namespace

TEST_SUITE("sturm_oracle") {
  TEST_CASE("examples") {
    CHECK(is_hyperbolic(DensePoly(Rs({"-2", "0", "1"}))));
    CHECK_FALSE(is_hyperbolic(DensePoly(Rs({"1", "0", "1"}))));
    CHECK(is_hyperbolic(Polynomial(Rs({"1", "2", "1"}))));   // double root at -1
    CHECK(is_hyperbolic(Polynomial(Rs({"1", "1", "1/4"}))));  // q = 4, double root
    CHECK_FALSE(is_hyperbolic(Polynomial(Rs({"1", "1", "1"}))));
    CHECK_THROWS_AS(is_hyperbolic(DensePoly(Rs({"3"}))), InvalidArgument);
    CHECK(count_real_roots(DensePoly(Rs({"-2", "0", "1"})), Bound::neg_inf(), Bound::pos_inf()) == 2);
    CHECK(count_real_roots(DensePoly(Rs({"-2", "0", "1"})), Bound(0), Bound(2)) == 1);
    // (lo, hi] convention
    CHECK(count_real_roots(DensePoly(Rs({"-1", "1"})), Bound(0), Bound(1)) == 1);
    CHECK(count_real_roots(DensePoly(Rs({"-1", "1"})), Bound(1), Bound(2)) == 0);
  }

  TEST_CASE("isolating sqrt 2") {
    const DensePoly p(Rs({"-2", "0", "1"}));
    const auto iv = isolate_roots(p, R("1/1000000"));
    REQUIRE(iv.size() == 2);
    CHECK(iv[1].hi - iv[1].lo <= R("1/1000000"));
    CHECK(iv[1].lo * iv[1].lo < 2);
    CHECK(iv[1].hi * iv[1].hi > 2);
    CHECK(iv[0].hi < 0);
    CHECK(isolate_roots_in(p, 0, 10).size() == 1);
  }

  TEST_CASE("root counts match polynomials with known roots") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
      const auto b = build(rng, 1 + trial % 5, trial % 3);
      const bool hyperbolic = trial % 3 == 0;
      CHECK(is_hyperbolic(b.poly) == hyperbolic);

      std::size_t total = 0;
      for (auto m : b.multiplicity) total += m;
      CHECK(count_real_roots_with_multiplicity(b.poly) == total);
      CHECK(count_real_roots(b.poly, Bound::neg_inf(), Bound::pos_inf()) == b.roots.size());

      for (int k = 0; k < 5; ++k) {
        Rational lo = hypq::testing::random_rational(rng, R("-12"), R("12"), 24);
        Rational hi = hypq::testing::random_rational(rng, R("-12"), R("12"), 24);
        if (hi < lo) std::swap(lo, hi);
        const auto expected = static_cast<std::size_t>(
            std::count_if(b.roots.begin(), b.roots.end(), [&](const Rational& r) { return lo < r && r <= hi; }));
        CHECK(count_real_roots(b.poly, lo, hi) == expected);
      }

      const auto sf = squarefree_part(b.poly);
      const auto iv = isolate_roots(sf);
      REQUIRE(iv.size() == b.roots.size());
      auto sorted = b.roots;
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t i = 0; i < iv.size(); ++i) {
        CHECK(iv[i].lo < sorted[i]);
        CHECK(sorted[i] <= iv[i].hi);
      }
    }
  }

  TEST_CASE("counts over a partition add up") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<Rational> c;
      for (int k = 0; k < 2 + trial % 9; ++k) c.push_back(hypq::testing::random_rational(rng, R("-5"), R("5"), 13));
      c.push_back(1);
      const DensePoly p(c);
      std::vector<Rational> cuts;
      for (int k = 0; k < 6; ++k) cuts.push_back(hypq::testing::random_rational(rng, R("-20"), R("20"), 17));
      std::sort(cuts.begin(), cuts.end());
      std::size_t sum = count_real_roots(p, Bound::neg_inf(), cuts.front());
      for (std::size_t i = 0; i + 1 < cuts.size(); ++i) sum += count_real_roots(p, cuts[i], cuts[i + 1]);
      sum += count_real_roots(p, cuts.back(), Bound::pos_inf());
      CHECK(sum == count_real_roots(p, Bound::neg_inf(), Bound::pos_inf()));
    }
  }

  TEST_CASE("square-free decomposition") {
    // (x - 1)^3 (x + 2)^2 (x^2 + 1)
    DensePoly p(std::vector<Rational>{1});
    for (int i = 0; i < 3; ++i) p = p * DensePoly(Rs({"-1", "1"}));
    for (int i = 0; i < 2; ++i) p = p * DensePoly(Rs({"2", "1"}));
    p = p * DensePoly(Rs({"1", "0", "1"}));
    const auto parts = squarefree_decomposition(p);
    DensePoly rebuilt(std::vector<Rational>{1});
    for (const auto& f : parts) {
      for (unsigned i = 0; i < f.multiplicity; ++i) rebuilt = rebuilt * f.factor;
    }
    CHECK(rebuilt.monic() == p.monic());
    CHECK(squarefree_part(p).degree() == 4);
    CHECK(gcd(p, p.derivative()).degree() == 3);
    CHECK(SturmChain(squarefree_part(p)).source_is_squarefree());
    CHECK_FALSE(SturmChain(p).source_is_squarefree());
  }

  TEST_CASE("negative simple roots") {
    CHECK(all_negative_and_simple(Polynomial(Rs({"2", "3", "1"}))));
    CHECK_FALSE(all_negative_and_simple(Polynomial(Rs({"1", "2", "1"}))));
    CHECK(all_negative_and_simple(from_quotients(QuotientSequence(Rs({"5", "5", "5", "5", "5"})), 1, 1)));
  }

  TEST_CASE("hyperbolicity is invariant under positive rescaling of x") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 30; ++trial) {
      const auto q = hypq::testing::random_quotients(rng, 3 + trial % 8, R("2"), R("6"), 50);
      const Polynomial p = from_quotients(q, 1, 1);
      const Rational lambda = hypq::testing::random_rational(rng, R("1/5"), R("5"), 40);
      std::vector<Rational> scaled(p.coeffs().begin(), p.coeffs().end());
      for (std::size_t k = 0; k < scaled.size(); ++k) scaled[k] *= pow(lambda, k);
      CHECK(is_hyperbolic(Polynomial(scaled)) == is_hyperbolic(p));
      CHECK(quotients(Polynomial(scaled)) == q);
    }
  }
}
