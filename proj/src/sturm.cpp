#include "hypq/sturm.hpp"

#include <algorithm>
#include <utility>

namespace hypq {

namespace {

int lc_sign(const IntPoly& p) { return sgn(p.back()); }

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

/// Divides out the positive content in place.
void make_primitive(IntPoly& p) {
  Integer g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  if (g == 0 || g == 1) return;
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

/// r with lc(b)^m a = Q b + r, deg r < deg b. Returns r and the sign of lc(b)^m,
/// so that sign * r is a positive multiple of rem(a, b).
std::pair<IntPoly, int> pseudo_remainder(IntPoly r, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  const Integer& lb = b.back();
  int sign_factor = 1;
  trim(r);
  while (!r.empty() && r.size() - 1 >= db) {
    const Integer lr = r.back();
    const std::size_t shift = r.size() - 1 - db;
    for (auto& c : r) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) r[shift + i] -= lr * b[i];
    if (lb < 0) sign_factor = -sign_factor;
    trim(r);
    make_primitive(r);
  }
  return {std::move(r), sign_factor};
}

/// Sign of p(num/den) for den > 0, evaluated on the homogenized form.
int sign_at(const IntPoly& p, const Rational& x) {
  const Integer& num = x.get_num();
  const Integer& den = x.get_den();
  Integer acc = p.back();
  Integer den_pow = 1;
  for (std::size_t k = p.size() - 1; k-- > 0;) {
    den_pow *= den;
    acc *= num;
    acc += p[k] * den_pow;
  }
  return sgn(acc);
}

int sign_at(const IntPoly& p, const Bound& x) {
  if (x.is_finite()) return sign_at(p, x.value());
  const int s = lc_sign(p);
  if (x.is_pos_inf()) return s;
  return ((p.size() - 1) % 2 == 0) ? s : -s;
}

IntPoly derivative(const IntPoly& p) {
  IntPoly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<unsigned long>(k));
  return d;
}

/// Primitive PRS gcd over Z (result primitive, positive leading coefficient).
IntPoly int_gcd(IntPoly a, IntPoly b) {
  trim(a);
  trim(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    auto [r, s] = pseudo_remainder(a, b);
    (void)s;
    a = std::move(b);
    b = std::move(r);
  }
  make_primitive(a);
  if (!a.empty() && a.back() < 0) {
    for (auto& c : a) c = -c;
  }
  return a;
}

DensePoly exact_quotient(const DensePoly& a, const DensePoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error("internal: inexact polynomial division");
  return q;
}

Rational root_bound_pow2(const DensePoly& p) {
  Rational m = 0;
  const Rational lead = abs(p.leading());
  for (long k = 0; k < p.degree(); ++k) m = std::max(m, Rational(abs(p[static_cast<std::size_t>(k)]) / lead));
  Rational bound = 1;
  while (bound < m + 1) bound *= 2;
  return bound;
}

void refine(const SturmChain& chain, RootInterval& iv, const Rational& width) {
  while (iv.hi - iv.lo > width) {
    Rational mid = (iv.lo + iv.hi) / 2;
    if (chain.count(iv.lo, mid) == 1) {
      iv.hi = mid;
    } else {
      iv.lo = mid;
    }
  }
}

std::vector<RootInterval> isolate_with(const SturmChain& chain, const Rational& lo, const Rational& hi,
                                       const std::optional<Rational>& max_width) {
  std::vector<RootInterval> out;
  // (lo, hi, variations at lo, variations at hi)
  struct Cell {
    Rational lo, hi;
    int vlo, vhi;
  };
  std::vector<Cell> stack{{lo, hi, chain.variations(lo), chain.variations(hi)}};
  while (!stack.empty()) {
    Cell c = std::move(stack.back());
    stack.pop_back();
    const int n = c.vlo - c.vhi;
    if (n <= 0) continue;
    if (n == 1) {
      out.push_back({c.lo, c.hi});
      continue;
    }
    Rational mid = (c.lo + c.hi) / 2;
    const int vmid = chain.variations(mid);
    stack.push_back({mid, c.hi, vmid, c.vhi});
    stack.push_back({c.lo, mid, c.vlo, vmid});
  }
  std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
  if (max_width) {
    for (auto& iv : out) refine(chain, iv, *max_width);
  }
  return out;
}

SturmChain squarefree_chain(const DensePoly& p) {
  SturmChain chain(p);
  if (!chain.source_is_squarefree()) throw InvalidArgument("polynomial is not square-free");
  return chain;
}

}  // namespace

bool operator<(const Bound& a, const Bound& b) {
  if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) < static_cast<int>(b.kind_);
  return a.is_finite() && a.value_ < b.value_;
}

IntPoly primitive_part(const DensePoly& p) {
  Integer l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  IntPoly out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c.get_num() * (l / c.get_den()));
  make_primitive(out);
  return out;
}

DensePoly to_dense(const IntPoly& p) {
  std::vector<Rational> c(p.begin(), p.end());
  return DensePoly(std::move(c));
}

SturmChain::SturmChain(const DensePoly& p) {
  if (p.is_zero()) throw InvalidArgument("Sturm chain of the zero polynomial");
  chain_.push_back(primitive_part(p));
  if (p.degree() == 0) return;
  chain_.push_back(derivative(chain_.front()));
  make_primitive(chain_.back());
  while (chain_.back().size() > 1) {
    auto [r, s] = pseudo_remainder(chain_[chain_.size() - 2], chain_.back());
    if (r.empty()) break;
    // next = -rem(p_{i-1}, p_i), up to a positive factor
    if (s > 0) {
      for (auto& c : r) c = -c;
    }
    chain_.push_back(std::move(r));
  }
}

int SturmChain::variations(const Bound& x) const {
  int changes = 0;
  int prev = 0;
  for (const auto& p : chain_) {
    const int s = sign_at(p, x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

int SturmChain::count(const Bound& lo, const Bound& hi) const {
  if (hi < lo) throw InvalidArgument("root count needs lo <= hi");
  if (!(lo < hi)) return 0;
  return variations(lo) - variations(hi);
}

DensePoly gcd(const DensePoly& a, const DensePoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  return to_dense(int_gcd(primitive_part(a), primitive_part(b))).monic();
}

DensePoly squarefree_part(const DensePoly& p) {
  if (p.degree() <= 0) return p;
  return exact_quotient(p, gcd(p, p.derivative())).monic();
}

std::vector<SquarefreeFactor> squarefree_decomposition(const DensePoly& p) {
  std::vector<SquarefreeFactor> out;
  if (p.degree() <= 0) return out;
  const DensePoly dp = p.derivative();
  const DensePoly b = gcd(p, dp);
  DensePoly c = exact_quotient(p, b);
  DensePoly d = exact_quotient(dp, b) - c.derivative();
  unsigned i = 1;
  while (c.degree() > 0) {
    DensePoly a = gcd(c, d);
    if (a.degree() > 0) out.push_back({a, i});
    c = exact_quotient(c, a);
    d = exact_quotient(d, a) - c.derivative();
    ++i;
  }
  return out;
}

std::size_t count_real_roots(const DensePoly& p, const Bound& lo, const Bound& hi) {
  if (p.is_zero()) throw InvalidArgument("root count of the zero polynomial");
  if (hi < lo) throw InvalidArgument("root count needs lo <= hi");
  if (p.degree() == 0 || !(lo < hi)) return 0;
  SturmChain chain(p);
  if (chain.source_is_squarefree()) return static_cast<std::size_t>(chain.count(lo, hi));
  return static_cast<std::size_t>(SturmChain(squarefree_part(p)).count(lo, hi));
}

std::size_t count_real_roots_with_multiplicity(const DensePoly& p) {
  if (p.is_zero()) throw InvalidArgument("root count of the zero polynomial");
  if (p.degree() == 0) return 0;
  SturmChain chain(p);
  if (chain.source_is_squarefree()) return static_cast<std::size_t>(chain.count(Bound::neg_inf(), Bound::pos_inf()));
  std::size_t total = 0;
  for (const auto& f : squarefree_decomposition(p)) {
    total += f.multiplicity * static_cast<std::size_t>(SturmChain(f.factor).count(Bound::neg_inf(), Bound::pos_inf()));
  }
  return total;
}

bool is_hyperbolic(const DensePoly& p) {
  if (p.degree() < 1) throw InvalidArgument("hyperbolicity needs degree >= 1");
  return count_real_roots_with_multiplicity(p) == static_cast<std::size_t>(p.degree());
}

std::vector<RootInterval> isolate_roots(const DensePoly& p, const std::optional<Rational>& max_width) {
  if (p.degree() < 1) return {};
  const SturmChain chain = squarefree_chain(p);
  const Rational b = root_bound_pow2(p);
  return isolate_with(chain, -b, b, max_width);
}

std::vector<RootInterval> isolate_roots_in(const DensePoly& p, const Rational& lo, const Rational& hi,
                                           const std::optional<Rational>& max_width) {
  if (!(lo < hi)) throw InvalidArgument("isolation interval needs lo < hi");
  if (p.degree() < 1) return {};
  return isolate_with(squarefree_chain(p), lo, hi, max_width);
}

bool all_negative_and_simple(const DensePoly& p) {
  if (p.degree() < 1) throw InvalidArgument("root structure needs degree >= 1");
  SturmChain chain(p);
  if (!chain.source_is_squarefree()) return false;
  const auto deg = static_cast<int>(p.degree());
  return chain.count(Bound::neg_inf(), Bound::pos_inf()) == deg && chain.count(Bound::neg_inf(), Bound(0)) == deg &&
         p[0] != 0;
}

}  // namespace hypq
