#pragma once

// Random generators and brute-force oracles shared by the unit tests and the
// acceptance binary. Oracles avoid the library's own algorithms.

#include "dioph/approx.hpp"
#include "dioph/heights.hpp"
#include "dioph/lattice.hpp"
#include "dioph/polyindex.hpp"
#include "dioph/roth.hpp"
#include "dioph/siegel.hpp"
#include "dioph/wronskian.hpp"

#ifndef SUPPORT_WITHOUT_DOCTEST
#include <doctest.h>
#endif

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <random>
#include <unordered_map>

namespace testing_support {

using namespace dioph;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng_); }
  bool coin() { return uniform(0, 1) == 1; }
  Rational rational(long num_max, long den_max) {
    long d = uniform(1, den_max);
    return make_rational(uniform(-num_max, num_max), d);
  }
  Rational nonzero_rational(long num_max, long den_max) {
    for (;;) {
      Rational q = rational(num_max, den_max);
      q.canonicalize();
      if (q != 0) return q;
    }
  }
  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

inline IntPoly random_int_poly(Rng& rng, int degree, long cmax, bool nonzero_const = false) {
  std::vector<Integer> c(static_cast<std::size_t>(degree) + 1);
  for (auto& v : c) v = rng.uniform(-cmax, cmax);
  while (c.back() == 0) c.back() = rng.uniform(-cmax, cmax);
  if (nonzero_const)
    while (c.front() == 0) c.front() = rng.uniform(-cmax, cmax);
  return IntPoly(c);
}

inline QPoly random_qpoly(Rng& rng, std::size_t arity, unsigned max_partial, long cmax, std::size_t max_terms) {
  QPoly p(arity);
  std::size_t terms = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(max_terms)));
  for (std::size_t t = 0; t < terms; ++t) {
    Exponent e(arity);
    for (auto& v : e) v = static_cast<unsigned>(rng.uniform(0, max_partial));
    p.add_term(e, Rational(rng.uniform(-cmax, cmax)));
  }
  return p;
}

inline QPoly linear_factor(std::size_t arity, std::size_t h, const Rational& a) {
  return QPoly::variable(arity, h, Rational(1)) - QPoly::constant(arity, a);
}

// Gaussian elimination over Q.
inline std::size_t oracle_rank(std::vector<std::vector<Rational>> m) {
  std::size_t r = 0;
  std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

inline std::size_t oracle_rank_int(const IntRows& rows) {
  std::vector<std::vector<Rational>> m;
  for (const auto& row : rows) {
    std::vector<Rational> r;
    for (const auto& v : row) r.emplace_back(v);
    m.push_back(r);
  }
  return oracle_rank(m);
}

inline std::size_t family_rank(const std::vector<QPoly>& fam) {
  std::map<Exponent, std::size_t> col;
  for (const auto& f : fam)
    for (const auto& [e, c] : f.terms()) col.emplace(e, 0);
  std::size_t k = 0;
  for (auto& [e, i] : col) i = k++;
  std::vector<std::vector<Rational>> m;
  for (const auto& f : fam) {
    std::vector<Rational> row(col.size());
    for (const auto& [e, c] : f.terms()) row[col[e]] = c;
    m.push_back(row);
  }
  return oracle_rank(m);
}

// Durand-Kerner in long double.
inline std::vector<std::complex<long double>> float_roots(const IntPoly& f) {
  using C = std::complex<long double>;
  std::size_t n = static_cast<std::size_t>(f.degree());
  std::vector<long double> a(n + 1);
  for (std::size_t i = 0; i <= n; ++i) a[i] = static_cast<long double>(f[i].get_d()) / static_cast<long double>(f.leading().get_d());
  std::vector<C> z(n);
  for (std::size_t k = 0; k < n; ++k) z[k] = std::pow(C(0.4L, 0.9L), static_cast<long double>(k));
  for (int it = 0; it < 5000; ++it) {
    long double change = 0;
    for (std::size_t k = 0; k < n; ++k) {
      C p = 0;
      for (std::size_t i = n + 1; i-- > 0;) p = p * z[k] + a[i];
      C d = 1;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) d *= z[k] - z[j];
      C step = p / d;
      z[k] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-18L) break;
  }
  return z;
}

inline long double float_mahler(const IntPoly& f) {
  long double m = std::fabs(static_cast<long double>(f.leading().get_d()));
  for (const auto& z : float_roots(f)) m *= std::max<long double>(1, std::abs(z));
  return m;
}

// Work estimate of oracle_kernel_point_exists: (2h + 1)^ceil(N/2).
inline double oracle_box_cost(std::size_t cols, long h) {
  return std::pow(2.0 * static_cast<double>(h) + 1, static_cast<double>((cols + 1) / 2));
}

// Whether some nonzero x with |x_i| <= h solves A x = 0, by meet-in-the-middle
// over [-h, h]^N. Row images are packed into one 64-bit key.
inline bool oracle_kernel_point_exists(const IntRows& a, std::size_t cols, long h) {
  if (h <= 0) return false;
  std::size_t small = cols / 2;
  auto key = [&](const std::vector<long>& x, std::size_t off, long sign) {
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      long long v = 0;
      for (std::size_t j = 0; j < x.size(); ++j) v += a[i][off + j].get_si() * x[j];
      k = k * 2000003ULL + static_cast<std::uint64_t>(sign * v + 1000000);
    }
    return k;
  };
  auto for_box = [](std::size_t n, long r, const auto& fn) {
    std::vector<long> x(n, -r);
    for (;;) {
      if (!fn(x)) return;
      std::size_t k = 0;
      while (k < n && x[k] == r) x[k++] = -r;
      if (k == n) return;
      ++x[k];
    }
  };
  auto nonzero = [](const std::vector<long>& x) { return std::any_of(x.begin(), x.end(), [](long v) { return v != 0; }); };
  std::unordered_map<std::uint64_t, bool> left;  // image -> reached by a nonzero part
  for_box(small, h, [&](const std::vector<long>& x) {
    bool nz = nonzero(x);
    auto [it, fresh] = left.emplace(key(x, 0, 1), nz);
    if (!fresh) it->second = it->second || nz;
    return true;
  });
  bool found = false;
  for_box(cols - small, h, [&](const std::vector<long>& x) {
    auto it = left.find(key(x, small, -1));
    if (it != left.end() && (nonzero(x) || it->second)) found = true;
    return !found;
  });
  return found;
}

inline IntRows random_matrix(Rng& rng, std::size_t m, std::size_t n, long amax) {
  IntRows a(m, IntVector(n));
  for (auto& row : a)
    for (auto& v : row) v = rng.uniform(-amax, amax);
  return a;
}

inline bool in_kernel(const IntRows& a, const IntVector& x) {
  for (const auto& row : a) {
    Integer s = 0;
    for (std::size_t j = 0; j < row.size(); ++j) s += row[j] * x[j];
    if (s != 0) return false;
  }
  return true;
}

// Index by expanding P(x + point) and reading the lowest weighted monomial.
inline IndexValue oracle_index(const QPoly& p, const std::vector<Rational>& point, const std::vector<unsigned long>& r) {
  std::map<Exponent, Rational> shifted;
  for (const auto& [e, c] : p.terms()) {
    std::vector<std::vector<Rational>> parts(e.size());
    for (std::size_t h = 0; h < e.size(); ++h)
      for (unsigned k = 0; k <= e[h]; ++k)
        parts[h].push_back(Rational(binomial(e[h], k)) * pow(point[h], static_cast<long>(e[h] - k)));
    Exponent k(e.size(), 0);
    for (;;) {
      Rational v = c;
      for (std::size_t h = 0; h < e.size(); ++h) v *= parts[h][k[h]];
      shifted[k] += v;
      std::size_t h = 0;
      while (h < e.size() && k[h] == e[h]) k[h++] = 0;
      if (h == e.size()) break;
      ++k[h];
    }
  }
  std::optional<Rational> best;
  for (const auto& [k, v] : shifted) {
    if (v == 0) continue;
    Rational w = 0;
    for (std::size_t h = 0; h < k.size(); ++h) w += make_rational(k[h], r[h]);
    if (!best || w < *best) best = w;
  }
  return best ? IndexValue::finite(*best) : IndexValue::inf();
}

inline unsigned long oracle_index_count(unsigned m, const Rational& eps, const std::vector<unsigned long>& r, bool strict) {
  Rational cap = Rational(m) * (1 - eps) / 2;
  unsigned long n = 0;
  std::vector<unsigned long> i(m, 0);
  for (;;) {
    Rational w = 0;
    for (unsigned h = 0; h < m; ++h) w += make_rational(i[h], r[h]);
    if (strict ? w < cap : w <= cap) ++n;
    unsigned h = 0;
    while (h < m && i[h] == r[h]) i[h++] = 0;
    if (h == m) break;
    ++i[h];
  }
  return n;
}

// Partial quotients of (P + sqrt(D)) / Q with Q | D - P^2.
inline std::vector<long> oracle_quadratic_cf(long P, long D, long Q, std::size_t n) {
  long s = static_cast<long>(std::sqrt(static_cast<double>(D)));
  while (s * s > D) --s;
  while ((s + 1) * (s + 1) <= D) ++s;
  std::vector<long> out;
  for (std::size_t k = 0; k < n; ++k) {
    long num = P + s;
    long a = Q > 0 ? num / Q : -((-num + (-Q) - 1) / (-Q));
    if (Q > 0 && num < 0 && num % Q != 0) --a;
    out.push_back(a);
    P = a * Q - P;
    Q = (D - P * P) / Q;
  }
  return out;
}

inline std::vector<Integer> oracle_euclid_cf(Integer p, Integer q) {
  std::vector<Integer> out;
  while (q != 0) {
    Integer a;
    mpz_fdiv_q(a.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    out.push_back(a);
    Integer r = p - a * q;
    p = q;
    q = r;
  }
  return out;
}

inline Rational oracle_gauge(const ConvexBody& b, const std::vector<long>& x) {
  Rational t = 0;
  for (std::size_t i = 0; i < b.forms.size(); ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < x.size(); ++j) s += b.forms[i][j] * x[j];
    t = std::max(t, Rational(abs(s) / b.bounds[i]));
  }
  return t;
}

// Successive minima by scanning the box |x_i| <= R: sort every point by
// gauge, then take the gauge at which the rank first reaches k.
inline std::vector<Rational> oracle_minima(const ConvexBody& b, long R) {
  std::size_t n = b.dimension();
  std::vector<std::pair<Rational, std::vector<long>>> pts;
  std::vector<long> x(n, -R);
  for (;;) {
    if (std::any_of(x.begin(), x.end(), [](long v) { return v != 0; })) pts.emplace_back(oracle_gauge(b, x), x);
    std::size_t k = 0;
    while (k < n && x[k] == R) x[k++] = -R;
    if (k == n) break;
    ++x[k];
  }
  std::sort(pts.begin(), pts.end(), [](const auto& u, const auto& v) { return u.first < v.first; });
  std::vector<Rational> lambdas;
  std::vector<std::vector<Rational>> basis;
  for (const auto& [t, v] : pts) {
    std::vector<Rational> row(v.begin(), v.end());
    basis.push_back(row);
    if (oracle_rank(basis) > lambdas.size())
      lambdas.push_back(t);
    else
      basis.pop_back();
    if (lambdas.size() == n) break;
  }
  return lambdas;
}

// Box radius covering every point of gauge <= max gauge of the unit vectors.
inline long oracle_box_radius(const ConvexBody& b) {
  std::size_t n = b.dimension();
  Rational T = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<long> e(n, 0);
    e[j] = 1;
    T = std::max(T, oracle_gauge(b, e));
  }
  RatRows inv = inverse(b.forms);
  Rational norm = 0;
  for (const auto& row : inv) {
    Rational s = 0;
    for (const auto& v : row) s += abs(v);
    norm = std::max(norm, s);
  }
  Rational cmax = *std::max_element(b.bounds.begin(), b.bounds.end());
  Rational R = T * norm * cmax;
  return floor(R).get_si();
}

inline ConvexBody random_body(Rng& rng, std::size_t n, long fmax, long cnum, long cden) {
  for (;;) {
    ConvexBody b;
    b.forms.assign(n, RatVector(n));
    for (auto& row : b.forms)
      for (auto& v : row) v = rng.uniform(-fmax, fmax);
    b.bounds.resize(n);
    for (auto& c : b.bounds) c = Rational(rng.uniform(1, cnum), rng.uniform(1, cden));
    for (auto& c : b.bounds) c.canonicalize();
    if (oracle_rank(b.forms) == n) return b;
  }
}

// Factorization by trial division; |q|_v for every place in the support.
inline std::vector<std::pair<Integer, long>> oracle_valuations(const Rational& q) {
  std::map<Integer, long> val;
  auto strip = [&](Integer n, long sign) {
    n = abs(n);
    for (Integer p = 2; p * p <= n; ++p)
      while (n % p == 0) {
        val[p] += sign;
        n /= p;
      }
    if (n > 1) val[n] += sign;
  };
  strip(q.get_num(), 1);
  strip(q.get_den(), -1);
  return {val.begin(), val.end()};
}

// Hypothesis-satisfying instance of Roth's lemma with m <= 2.
struct RothInstance {
  QPoly p;
  std::vector<Rational> beta;
  std::vector<unsigned long> r;
  Rational eta;
};

inline RothInstance roth_instance(Rng& rng, unsigned m) {
  RothInstance in;
  in.eta = Rational(1, 2);
  if (m == 1) {
    in.r = {static_cast<unsigned long>(rng.uniform(6, 10))};
    Integer num = pow(Integer(2), static_cast<unsigned long>(rng.uniform(40, 60))) + rng.uniform(0, 1000);
    Rational b(num, rng.uniform(1, 9));
    b.canonicalize();
    if (rng.coin()) b = -b;
    in.beta = {b};
    QPoly p = QPoly::constant(1, Rational(rng.uniform(1, 5)));
    unsigned k = static_cast<unsigned>(rng.uniform(0, 2));
    for (unsigned i = 0; i < k; ++i) p = p * (QPoly::variable(1, 0, 1) - QPoly::constant(1, Rational(rng.uniform(-3, 3))));
    if (rng.coin()) p = p * (QPoly::variable(1, 0, 1) * QPoly::constant(1, Rational(b.get_den())) -
                             QPoly::constant(1, Rational(b.get_num())));
    in.p = p;
    return in;
  }
  in.r = {8, 2};
  Integer n1 = pow(Integer(2), static_cast<unsigned long>(rng.uniform(70, 90))) + rng.uniform(1, 999);
  Integer n2 = pow(Integer(2), static_cast<unsigned long>(rng.uniform(320, 360))) + rng.uniform(1, 999);
  Rational b1(n1, rng.uniform(1, 7)), b2(n2, rng.uniform(1, 7));
  b1.canonicalize();
  b2.canonicalize();
  in.beta = {b1, b2};
  QPoly p = QPoly::constant(2, Rational(rng.uniform(1, 9)));
  if (rng.coin()) p = p * (QPoly::variable(2, 0, 1) * QPoly::constant(2, Rational(b1.get_den())) -
                           QPoly::constant(2, Rational(b1.get_num())));
  if (rng.coin()) p = p * (QPoly::variable(2, 1, 1) - QPoly::constant(2, Rational(rng.uniform(-3, 3))));
  if (rng.coin()) p = p * (QPoly::variable(2, 0, 1) + QPoly::variable(2, 1, 1));
  in.p = p;
  return in;
}

}  // namespace testing_support

#ifndef SUPPORT_WITHOUT_DOCTEST
namespace doctest {
template <>
struct StringMaker<dioph::IndexValue> {
  static String convert(const dioph::IndexValue& v) { return dioph::to_string(v).c_str(); }
};
template <>
struct StringMaker<dioph::Rational> {
  static String convert(const dioph::Rational& v) { return dioph::to_string(v).c_str(); }
};
template <>
struct StringMaker<dioph::Integer> {
  static String convert(const dioph::Integer& v) { return dioph::to_string(v).c_str(); }
};
}  // namespace doctest
#endif
