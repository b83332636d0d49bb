#include "dioph/heights.hpp"

#include "dioph/factor.hpp"

#include <algorithm>
#include <omp.h>

namespace dioph {

Place Place::prime(const Integer& p) {
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0) throw DomainError(to_string(p) + " is not prime");
  return {false, p};
}

std::string to_string(const Place& v) { return v.archimedean ? "inf" : v.p.get_str(); }

namespace {

unsigned long valuation(Integer n, const Integer& p) {
  unsigned long v = 0;
  n = abs(n);
  while (n != 0 && mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
    n /= p;
    ++v;
  }
  return v;
}

}  // namespace

Rational abs_at(const Rational& q, const Place& v) {
  if (v.archimedean) return abs(q);
  if (q == 0) return 0;
  unsigned long up = valuation(q.get_num(), v.p), down = valuation(q.get_den(), v.p);
  // |q|_p = p^{-ord_p q}
  return make_rational(pow(v.p, down), pow(v.p, up));
}

std::vector<Place> support_places(const Rational& q) {
  if (q == 0) throw DomainError("places of zero");
  std::vector<Place> out{Place::infinity()};
  for (const Integer& n : {Integer(q.get_num()), Integer(q.get_den())})
    for (const auto& [p, e] : factorize(abs(n))) out.push_back({false, p});
  std::sort(out.begin(), out.end());
  return out;
}

Rational product_abs_over_S(const Rational& q, const std::vector<Place>& S) {
  if (q == 0) throw DomainError("absolute values of zero over a set of places");
  std::vector<Place> s = S;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  Rational prod = 1;
  for (const auto& v : s) prod *= abs_at(q, v);
  return prod;
}

RealEnclosure sum_log_abs_over_S(const Rational& q, const std::vector<Place>& S, const Rational& width) {
  Rational prod = product_abs_over_S(q, S);
  if (prod == 1) return RealEnclosure::point(0);
  return log_enclosure(prod, width);
}

RealEnclosure log_height(const HeightValue& h, const Rational& width) {
  if (h.enclosure.lo == 1 && h.enclosure.hi == 1) return RealEnclosure::point(0);
  return log_enclosure(h.enclosure, width);
}

HeightValue height_rational(const Rational& q) {
  if (q == 0) return HeightValue::of_exact(1);
  return HeightValue::of_exact(Rational(std::max(abs(q.get_num()), Integer(q.get_den()))));
}

std::vector<Integer> canonical_projective(const std::vector<Rational>& coords) {
  Integer l = 1, g = 0;
  for (const auto& c : coords) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  for (const auto& c : coords) {
    out.push_back(c.get_num() * (l / c.get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
  }
  if (g == 0) throw DomainError("projective point with all coordinates zero");
  auto first = std::find_if(out.begin(), out.end(), [](const Integer& v) { return v != 0; });
  if (*first < 0) g = -g;
  for (auto& v : out) v /= g;
  return out;
}

HeightValue height_projective(const std::vector<Rational>& coords) {
  Integer h = 0;
  for (const auto& v : canonical_projective(coords)) h = std::max(h, abs(v));
  return HeightValue::of_exact(Rational(h));
}

HeightValue height_polynomial(const RatPoly& f) {
  if (f.is_zero()) throw DomainError("height of the zero polynomial");
  return height_projective(f.coeffs());
}

HeightValue height_polynomial(const QPoly& f) {
  if (f.is_zero()) throw DomainError("height of the zero polynomial");
  std::vector<Rational> c;
  for (const auto& [e, v] : f.terms()) c.push_back(v);
  return height_projective(c);
}

namespace {

// Roots on the unit circle of a squarefree polynomial.
std::size_t unit_count_squarefree(IntPoly g) {
  std::size_t count = 0;
  const IntPoly x{Integer(0), Integer(1)};
  while (g[0] == 0) g = *exact_divide(g, x);
  for (const IntPoly& lin : {IntPoly{Integer(-1), Integer(1)}, IntPoly{Integer(1), Integer(1)}}) {
    if (auto q = exact_divide(g, lin)) {
      g = *q;
      ++count;
    }
  }
  if (g.degree() < 2) return count;
  // palindromic part: roots alpha with 1/alpha also a root
  IntPoly h = gcd(g, g.reversed());
  if (h.degree() < 2) return count;
  std::size_t k = static_cast<std::size_t>(h.degree()) / 2;
  // h(x) = x^k q(x + 1/x); x^j + x^{-j} = D_j(t) with D_0 = 2, D_1 = t
  IntPoly q = IntPoly::constant(h[k]);
  IntPoly d_prev{Integer(2)}, d_cur{Integer(0), Integer(1)};
  const IntPoly t{Integer(0), Integer(1)};
  for (std::size_t j = 1; j <= k; ++j) {
    q += d_cur * h.coeff(k + j);
    IntPoly next = t * d_cur - d_prev;
    d_prev = std::move(d_cur);
    d_cur = std::move(next);
  }
  return count + 2 * static_cast<std::size_t>(count_real_roots(q, -2, 2));
}

struct FactorMeasure {
  bool exact = false;
  RealEnclosure value;
};

// Measure of one squarefree primitive factor; roots on the unit circle count exactly 1.
FactorMeasure factor_measure(const IntPoly& g, std::size_t unit, Rational width) {
  Rational lead = abs(Rational(g.leading()));
  for (int attempt = 0; attempt < 40; ++attempt) {
    std::vector<RealEnclosure> mods = root_moduli(g, width);
    std::size_t on = 0, inside = 0, outside = 0;
    for (const auto& m : mods) {
      if (m.lo > 1)
        ++outside;
      else if (m.hi < 1)
        ++inside;
      else
        ++on;
    }
    if (on != unit) {
      width /= 1024;
      continue;
    }
    if (outside == 0) return {true, RealEnclosure::point(lead)};
    if (inside == 0) return {true, RealEnclosure::point(abs(Rational(g[0])))};
    RealEnclosure m = RealEnclosure::point(lead);
    for (const auto& e : mods)
      if (e.lo > 1) m = m * e;
    return {false, m};
  }
  throw PrecisionError("could not separate roots from the unit circle for " + to_string(g));
}

bool mahler_equals_integer(const IntPoly& g, const Integer& c);

}  // namespace

std::size_t unit_circle_root_count(const IntPoly& f) {
  if (f.is_zero()) throw DomainError("roots of the zero polynomial");
  std::size_t n = 0;
  for (const auto& [g, m] : squarefree_decomposition(f)) n += m * unit_count_squarefree(g);
  return n;
}

RealEnclosure mahler_measure(const IntPoly& f, const Rational& precision) {
  if (f.is_zero()) throw DomainError("Mahler measure of the zero polynomial");
  if (precision <= 0) throw DomainError("non-positive precision");
  Rational content = content_and_primitive(f).first;
  if (f.degree() == 0) return RealEnclosure::point(content);
  auto factors = squarefree_decomposition(f);
  std::vector<std::size_t> units;
  for (const auto& [g, m] : factors) units.push_back(unit_count_squarefree(g));
  Rational width = precision / Rational(16 * (f.degree() + 1));
  for (int attempt = 0; attempt < 12; ++attempt) {
    RealEnclosure total = RealEnclosure::point(content);
    for (std::size_t i = 0; i < factors.size(); ++i) {
      FactorMeasure fm = factor_measure(factors[i].first, units[i], width);
      total = total * pow(fm.value, factors[i].second);
    }
    if (total.width() <= precision) return total;
    // relative error grows with the size of M
    width = width * precision / (total.width() * 4);
    if (width <= 0) width = precision / 1024;
  }
  throw PrecisionError("Mahler measure enclosure did not reach the requested width");
}

namespace {

bool mahler_equals_integer(const IntPoly& g, const Integer& c) {
  long n = g.degree();
  Rational radius(1, 1);
  radius /= Rational(pow(Integer(10), 20));
  std::size_t unit = unit_count_squarefree(g);
  for (int attempt = 0; attempt < 8; ++attempt, radius /= Rational(pow(Integer(2), 64))) {
    std::vector<Disk> disks = root_disks(g, radius);
    std::vector<std::size_t> outside;
    std::size_t on = 0;
    for (std::size_t j = 0; j < disks.size(); ++j) {
      RealEnclosure m = disks[j].modulus();
      if (m.lo > 1)
        outside.push_back(j);
      else if (m.hi >= 1)
        ++on;
    }
    if (on != unit) continue;
    std::size_t k = outside.size();
    if (k == 0) return abs(g.leading()) == c;
    if (binomial(static_cast<unsigned long>(n), k) > 200)
      throw PrecisionError("Mahler tie test needs too many root products");
    // every product a_n prod_{S} alpha, |S| = k, is an algebraic integer; v is the one for the outside roots
    Disk lead{ComplexRational(g.leading()), 0};
    std::vector<Disk> products;
    Disk v;
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    for (;;) {
      Disk p = lead;
      for (auto i : pick) p = p * disks[i];
      if (pick == outside) v = p;
      products.push_back(p);
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == static_cast<std::size_t>(n) - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    std::optional<IntPoly> gk;
    try {
      gk = integer_poly_from_roots(products, 1);
    } catch (const PrecisionError&) {
      continue;
    }
    if (!gk) throw InternalError("symmetric root products did not give an integer polynomial");
    if (v.center.im != 0) throw InternalError("product over a conjugation-closed root set is not real");
    Rational lo = v.center.re - v.radius, hi = v.center.re + v.radius;
    IntPoly r = squarefree_part(*gk);
    if (count_real_roots(r, lo, hi) != 1) continue;
    for (const Rational& w : {Rational(c), Rational(-c)})
      if (lo <= w && w <= hi && sign_at(r, w) == 0) return true;
    return false;
  }
  throw PrecisionError("Mahler tie test did not converge");
}

}  // namespace

int compare_mahler(const IntPoly& f, const Rational& c) {
  if (squarefree_part(f).degree() != f.degree()) throw DomainError("compare_mahler needs a squarefree polynomial");
  Rational width(1, 1000000);
  const Rational factor(1, 10000);
  const Rational tie_threshold = Rational(1) / Rational(pow(Integer(10), 40));
  const Rational floor_width = Rational(1) / Rational(pow(Integer(10), 400));
  bool tie_tested = false;
  while (width >= floor_width) {
    RealEnclosure m = mahler_measure(f, width);
    if (m.hi < c) return -1;
    if (m.lo > c) return 1;
    if (m.is_point()) return 0;
    if (width < tie_threshold && !tie_tested) {
      // M(f) = content * M(g) with M(g) an algebraic integer
      auto [content, g] = content_and_primitive(f);
      Rational target = c / Rational(content);
      if (target.get_den() == 1 && mahler_equals_integer(g, target.get_num())) return 0;
      tie_tested = true;
    }
    width *= factor;
  }
  throw PrecisionError("Mahler comparison undecided");
}

namespace {

HeightValue height_from_min_poly(const IntPoly& f, const Rational& precision) {
  unsigned long n = static_cast<unsigned long>(f.degree());
  RealEnclosure m = mahler_measure(f, precision / 2);
  if (m.is_point()) {
    Integer a = m.lo.get_num(), b = m.lo.get_den(), ra, rb;
    bool ea = mpz_root(ra.get_mpz_t(), a.get_mpz_t(), n) != 0;
    bool eb = mpz_root(rb.get_mpz_t(), b.get_mpz_t(), n) != 0;
    if (ea && eb) return HeightValue::of_exact(make_rational(ra, rb));
  }
  return {std::nullopt, root_enclosure(m, n, precision / 2)};
}

}  // namespace

HeightValue weil_height_algebraic(const AlgebraicNumber& a, const Rational& precision) {
  return height_from_min_poly(a.min_poly(), precision);
}

HeightValue weil_height(const NFElement& a, const Rational& precision) {
  if (a.is_zero()) return HeightValue::of_exact(1);
  return height_from_min_poly(element_min_poly(a), precision);
}

namespace {

bool northcott_accepts(const IntPoly& f, const Rational& bound) {
  long n = f.degree();
  if (f[0] == 0) return n == 1 && f[1] == 1;
  if (content_and_primitive(f).first != 1) return false;
  if (n <= 3 && !is_irreducible(f)) return false;
  if (n > 3 && squarefree_part(f).degree() != n) return false;
  Integer norm2 = 0;
  for (const auto& a : f.coeffs()) norm2 += a * a;
  // Landau: M(f) <= ||f||_2
  bool small = Rational(norm2) <= bound * bound;
  if (!small && compare_mahler(f, bound) > 0) return false;
  return n <= 3 || is_irreducible(f);
}

}  // namespace

std::vector<NorthcottEntry> northcott_enumerate(int degree_max, const Rational& height_max, Exec exec) {
  if (degree_max < 1) throw DomainError("degree_max must be at least 1");
  if (degree_max > kNorthcottDegreeCap) throw UnsupportedError("Northcott enumeration is capped at degree 12");
  if (height_max < 1) throw DomainError("height_max must be at least 1");
  std::vector<IntPoly> found;
  for (int n = 1; n <= degree_max; ++n) {
    Rational bound = pow(height_max, n);
    std::vector<Integer> lo(static_cast<std::size_t>(n) + 1), size(static_cast<std::size_t>(n) + 1);
    Integer total = 1;
    for (int i = 0; i <= n; ++i) {
      Integer b = floor(Rational(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(i))) * bound);
      if (i == n) {
        lo[i] = 1;
        size[i] = b;
      } else {
        lo[i] = -b;
        size[i] = 2 * b + 1;
      }
      total *= size[i];
    }
    if (total > Integer("4000000000")) throw UnsupportedError("Northcott coefficient box too large");
    long long count = total.get_si();
    std::vector<long> lo_l, size_l;
    for (int i = 0; i <= n; ++i) {
      lo_l.push_back(lo[i].get_si());
      size_l.push_back(size[i].get_si());
    }
    auto decode = [&](long long idx) {
      std::vector<Integer> c(static_cast<std::size_t>(n) + 1);
      for (int i = 0; i <= n; ++i) {
        long s = size_l[i];
        c[i] = static_cast<long>(lo_l[i] + idx % s);
        idx /= s;
      }
      return IntPoly(std::move(c));
    };
    if (exec == Exec::serial) {
      for (long long idx = 0; idx < count; ++idx) {
        IntPoly f = decode(idx);
        if (northcott_accepts(f, bound)) found.push_back(std::move(f));
      }
    } else {
      std::vector<std::vector<IntPoly>> local(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel for schedule(dynamic, 64)
      for (long long idx = 0; idx < count; ++idx) {
        IntPoly f = decode(idx);
        if (northcott_accepts(f, bound)) local[static_cast<std::size_t>(omp_get_thread_num())].push_back(std::move(f));
      }
      for (auto& v : local)
        for (auto& f : v) found.push_back(std::move(f));
    }
  }
  std::sort(found.begin(), found.end(), [](const IntPoly& a, const IntPoly& b) { return a.coeffs() < b.coeffs(); });
  std::vector<NorthcottEntry> out;
  for (auto& f : found) {
    RealEnclosure m = mahler_measure(f, Rational(1, 1000000000000L));
    out.push_back({std::move(f), m});
  }
  return out;
}

std::optional<unsigned long> is_root_of_unity(const AlgebraicNumber& a) {
  unsigned long n = a.degree();
  // phi(k) >= sqrt(k/2), so k <= 2 n^2
  for (unsigned long k = 1; k <= 2 * n * n + 2; ++k)
    if (euler_phi(k) == n && cyclotomic(k) == a.min_poly()) return k;
  return std::nullopt;
}

}  // namespace dioph
