#include "dioph/siegel.hpp"

#include <algorithm>
#include <unordered_map>

namespace dioph {

namespace {

Integer sup_norm(const IntVector& x) {
  Integer s = 0;
  for (const auto& v : x) s = std::max(s, abs(v));
  return s;
}

Integer matrix_max(const IntRows& a) {
  Integer m = 0;
  for (const auto& row : a)
    for (const auto& v : row) m = std::max(m, abs(v));
  return m;
}

void check_shape(const IntRows& a) {
  if (a.empty()) throw DomainError("empty matrix");
  std::size_t n = a[0].size();
  for (const auto& row : a)
    if (row.size() != n) throw DomainError("ragged matrix");
  if (a.size() >= n) throw DomainError("Siegel's lemma needs fewer rows than columns");
  if (matrix_max(a) == 0) throw DomainError("all-zero matrix");
}

bool in_kernel(const IntRows& a, const IntVector& x) {
  for (const auto& row : a) {
    Integer s = 0;
    for (std::size_t j = 0; j < x.size(); ++j) s += row[j] * x[j];
    if (s != 0) return false;
  }
  return true;
}

}  // namespace

void canonical_sign(IntVector& x) {
  for (const auto& v : x) {
    if (v == 0) continue;
    if (v < 0)
      for (auto& t : x) t = -t;
    return;
  }
}

bool siegel_order_less(const IntVector& a, const IntVector& b) {
  Integer sa = sup_norm(a), sb = sup_norm(b);
  if (sa != sb) return sa < sb;
  std::vector<std::size_t> pa, pb;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) pa.push_back(i);
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i] != 0) pb.push_back(i);
  if (pa != pb) return pa < pb;
  return a < b;
}

bool siegel_bound_holds(const IntVector& x, std::size_t rows, std::size_t cols, const Integer& a_max) {
  Integer lhs = pow(sup_norm(x), static_cast<unsigned long>(cols - rows));
  Integer rhs = pow(Integer(static_cast<unsigned long>(cols)) * a_max, static_cast<unsigned long>(rows));
  return lhs < rhs;
}

SiegelResult siegel_solve_Z(const IntRows& a) {
  check_shape(a);
  std::size_t m = a.size(), n = a[0].size();
  IntRows basis = integer_kernel_basis(a, n);
  if (basis.empty()) throw InternalError("underdetermined system with trivial integer kernel");
  lll_reduce(basis);
  std::size_t k = basis.size();
  IntVector best;
  for (auto v : basis) {
    canonical_sign(v);
    if (best.empty() || siegel_order_less(v, best)) best = v;
  }
  RatRows gram(k, RatVector(k, Rational(0)));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Integer s = 0;
      for (std::size_t t = 0; t < n; ++t) s += basis[i][t] * basis[j][t];
      gram[i][j] = s;
    }
  // ||v||_2^2 <= n ||v||_inf^2
  auto radius = [n](const Integer& sup) { return Rational(Integer(static_cast<unsigned long>(n)) * sup * sup); };
  Rational bound = radius(sup_norm(best));
  EllipsoidEnumerator walker(gram);
  auto visit = [&](const IntVector& y, Rational& b) {
    IntVector v(n, Integer(0));
    for (std::size_t i = 0; i < k; ++i)
      if (y[i] != 0)
        for (std::size_t t = 0; t < n; ++t) v[t] += y[i] * basis[i][t];
    canonical_sign(v);
    if (siegel_order_less(v, best)) {
      best = v;
      b = radius(sup_norm(best));
    }
  };
  bool complete = walker.enumerate(bound, visit, kSiegelNodeBudget);
  Integer amax = matrix_max(a);
  if (!complete && !siegel_bound_holds(best, m, n, amax)) {
    bound = radius(sup_norm(best));
    complete = walker.enumerate(bound, visit);
  }
  if (!in_kernel(a, best)) throw InternalError("Siegel solver produced a vector outside the kernel");
  SiegelResult r{best, m, n, amax, sup_norm(best), k, complete};
  if (!siegel_bound_holds(best, m, n, r.a_max)) throw InternalError("Siegel bound violated by the minimal solution");
  return r;
}

IntVector siegel_pigeonhole(const IntRows& a) {
  check_shape(a);
  std::size_t m = a.size(), n = a[0].size();
  if (n > 6) throw UnsupportedError("pigeonhole search is limited to N <= 6");
  Integer amax = matrix_max(a);
  // least H with (H+1)^N > (N A H + 1)^M
  Integer h = 1;
  auto nn = static_cast<unsigned long>(n), mm = static_cast<unsigned long>(m);
  while (pow(h + 1, nn) <= pow(Integer(nn) * amax * h + 1, mm)) ++h;
  if (pow(h + 1, nn) > 4000000) throw UnsupportedError("pigeonhole box too large");
  long hh = h.get_si();
  std::map<IntVector, IntVector> seen;
  IntVector x(n, Integer(0));
  for (;;) {
    IntVector img(m, Integer(0));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) img[i] += a[i][j] * x[j];
    auto [it, fresh] = seen.emplace(img, x);
    if (!fresh) {
      IntVector d(n);
      for (std::size_t j = 0; j < n; ++j) d[j] = x[j] - it->second[j];
      return d;
    }
    std::size_t j = 0;
    while (j < n && x[j] == hh) x[j++] = 0;
    if (j == n) break;
    ++x[j];
  }
  throw InternalError("pigeonhole search found no collision");
}

IntRows expand_nf_rows(const NFMatrix& a) {
  std::size_t d = a.base->degree();
  IntRows out;
  for (const auto& row : a.entries) {
    Integer l = 1;
    for (const auto& e : row) {
      require_same_field(e.base(), a.base);
      for (const auto& c : e.rep().coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    }
    for (std::size_t k = 0; k < d; ++k) {
      IntVector r;
      for (const auto& e : row) {
        Rational c = e.rep().coeff(k) * Rational(l);
        r.push_back(c.get_num());
      }
      out.push_back(std::move(r));
    }
  }
  return out;
}

RealEnclosure embedding_constant(const AlgebraicNumber& alpha, const Rational& precision) {
  std::size_t d = alpha.degree();
  if (d == 1) return RealEnclosure::point(1);
  Rational radius = precision / Rational(static_cast<unsigned long>(64 * d * d));
  for (int attempt = 0; attempt < 8; ++attempt, radius /= Rational(1 << 20)) {
    std::vector<Disk> roots = root_disks(alpha.min_poly(), radius);
    // coefficient k of the Lagrange polynomial l_r is entry (k, r) of V^{-1}
    std::vector<Rational> lo(d, Rational(0)), hi(d, Rational(0));
    for (std::size_t r = 0; r < d; ++r) {
      std::vector<Disk> poly{Disk{ComplexRational(1), 0}};
      Disk denom{ComplexRational(1), 0};
      for (std::size_t s = 0; s < d; ++s) {
        if (s == r) continue;
        std::vector<Disk> next(poly.size() + 1, Disk{ComplexRational(0), 0});
        for (std::size_t i = 0; i < poly.size(); ++i) {
          next[i + 1] = next[i + 1] + poly[i];
          next[i] = next[i] - poly[i] * roots[s];
        }
        poly = std::move(next);
        denom = denom * (roots[r] - roots[s]);
      }
      for (std::size_t k = 0; k < d; ++k) {
        Disk c = poly[k] / denom;
        lo[k] += c.modulus_lower();
        hi[k] += c.modulus_upper();
      }
    }
    RealEnclosure c1{*std::max_element(lo.begin(), lo.end()), *std::max_element(hi.begin(), hi.end())};
    if (c1.width() <= precision) return c1;
  }
  throw PrecisionError("embedding constant did not reach the requested width");
}

NFSiegelResult siegel_solve_NF(const NFMatrix& a) {
  if (!a.base) throw DomainError("number field matrix without a generator");
  const IntPoly& f = a.base->min_poly();
  if (f.leading() != 1) throw UnsupportedError("siegel_solve_NF needs a monic generator");
  std::size_t d = a.base->degree(), m = a.rows(), n = a.cols();
  if (m == 0) throw DomainError("empty matrix");
  for (const auto& row : a.entries)
    if (row.size() != n) throw DomainError("ragged matrix");
  if (n <= d * m) throw DomainError("siegel_solve_NF needs N > d M");
  IntRows expanded = expand_nf_rows(a);
  NFSiegelResult r;
  r.degree = d;
  r.rows = m;
  r.cols = n;
  r.expanded = siegel_solve_Z(expanded);
  r.x = r.expanded.x;
  for (const auto& row : a.entries) {
    NFElement s(a.base, Rational(0));
    for (std::size_t j = 0; j < n; ++j) s = s + Rational(r.x[j]) * row[j];
    if (!s.is_zero()) throw InternalError("NF Siegel solution fails exact verification");
  }
  std::vector<Rational> coords(r.x.begin(), r.x.end());
  r.height = height_projective(coords);

  const Rational precision = Rational(1) / Rational(pow(Integer(10), 15));
  r.c1 = embedding_constant(*a.base, precision);
  r.log_c1 = log_enclosure(r.c1, precision);
  std::vector<Disk> roots = d == 1 ? std::vector<Disk>{a.base->disk(precision)}
                                   : root_disks(f, precision / Rational(1 << 10));
  Rational lo = 0, hi = 0;
  for (const auto& row : a.entries) {
    Integer l = 1;
    for (const auto& e : row)
      for (const auto& c : e.rep().coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    for (const auto& e : row) {
      NFElement scaled = Rational(l) * e;
      for (const auto& root : roots) {
        Disk v = scaled.embed(root);
        lo = std::max(lo, v.modulus_lower());
        hi = std::max(hi, v.modulus_upper());
      }
    }
  }
  r.conj_max = {lo, hi};
  Rational factor = Rational(static_cast<unsigned long>(d * m)) / Rational(static_cast<unsigned long>(n - d * m));
  RealEnclosure logs = log_enclosure(r.conj_max, precision) +
                       log_enclosure(Rational(static_cast<unsigned long>(n)), precision) + r.log_c1;
  r.bound = factor * logs;
  // H(x)^{N-dM} < (N c1 conj_max)^{dM}
  Rational lhs = pow(r.height.enclosure.hi, static_cast<long>(n - d * m));
  Rational rhs = pow(Rational(static_cast<unsigned long>(n)) * r.c1.hi * r.conj_max.hi, static_cast<long>(d * m));
  r.bound_holds = lhs < rhs;
  return r;
}

}  // namespace dioph
