#include "dioph/real_roots.hpp"

#include <algorithm>

namespace dioph {

namespace {

// Positive rescaling to a primitive integer polynomial; keeps signs.
IntPoly positive_primitive(const RatPoly& f) {
  if (f.is_zero()) return {};
  Integer l = 1;
  for (const auto& a : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.get_den_mpz_t());
  std::vector<Integer> c;
  for (const auto& a : f.coeffs()) c.push_back(a.get_num() * (l / a.get_den()));
  return content_and_primitive(IntPoly(std::move(c))).second;
}

Rational split_point(const IntPoly& f, const Rational& lo, const Rational& hi) {
  Rational mid = (lo + hi) / 2;
  Rational step = (hi - lo) / 4;
  while (sign_at(f, mid) == 0) {
    mid = (lo + hi) / 2 + step;
    step /= 2;
  }
  return mid;
}

}  // namespace

SturmSequence::SturmSequence(const IntPoly& squarefree) {
  if (squarefree.is_zero()) throw DomainError("Sturm sequence of the zero polynomial");
  chain_.push_back(squarefree);
  IntPoly d = squarefree.derivative();
  if (d.is_zero()) return;
  chain_.push_back(content_and_primitive(d).second);
  while (chain_.back().degree() > 0) {
    RatPoly r = rem(to_rational(chain_[chain_.size() - 2]), to_rational(chain_.back()));
    if (r.is_zero()) break;
    chain_.push_back(positive_primitive(-r));
  }
}

int SturmSequence::variations(const Rational& x) const {
  int v = 0, last = 0;
  for (const auto& p : chain_) {
    int s = sign_at(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

int SturmSequence::count(const Rational& a, const Rational& b) const { return variations(a) - variations(b); }

std::vector<IsolatingInterval> isolate_real_roots(const IntPoly& f) {
  if (f.is_zero()) throw DomainError("real roots of the zero polynomial");
  std::vector<IsolatingInterval> out;
  if (f.degree() < 1) return out;
  IntPoly g = squarefree_part(f);
  SturmSequence sturm(g);
  Rational bound = cauchy_root_bound(g);
  struct Item {
    Rational lo, hi;
    int n;
  };
  std::vector<Item> stack{{-bound, bound, sturm.count(-bound, bound)}};
  while (!stack.empty()) {
    Item it = stack.back();
    stack.pop_back();
    if (it.n == 0) continue;
    if (it.n == 1) {
      out.push_back({it.lo, it.hi});
      continue;
    }
    Rational mid = split_point(g, it.lo, it.hi);
    int left = sturm.count(it.lo, mid);
    stack.push_back({it.lo, mid, left});
    stack.push_back({mid, it.hi, it.n - left});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
  return out;
}

int count_real_roots(const IntPoly& f, const Rational& a, const Rational& b) {
  if (a > b) return 0;
  IntPoly g = squarefree_part(f);
  if (g.degree() < 1) return 0;
  SturmSequence sturm(g);
  int n = a < b ? sturm.count(a, b) : 0;
  if (sign_at(g, a) == 0) ++n;
  return n;
}

IsolatingInterval refine_root(const IntPoly& f, IsolatingInterval iv, const Rational& width) {
  if (iv.exact()) return iv;
  int slo = sign_at(f, iv.lo);
  if (slo == 0 || sign_at(f, iv.hi) == 0 || slo == sign_at(f, iv.hi))
    throw DomainError("interval does not bracket a simple root");
  while (iv.hi - iv.lo > width) {
    Rational mid = (iv.lo + iv.hi) / 2;
    int s = sign_at(f, mid);
    if (s == 0) return {mid, mid};
    if (s == slo)
      iv.lo = mid;
    else
      iv.hi = mid;
  }
  return iv;
}

}  // namespace dioph
