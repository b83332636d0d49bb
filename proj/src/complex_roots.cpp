#include "dioph/complex_roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

namespace dioph {

Rational Disk::modulus_upper() const { return sqrt_upper(center.norm2()) + radius; }

Rational Disk::modulus_lower() const {
  Rational m = sqrt_lower(center.norm2()) - radius;
  return m > 0 ? m : Rational(0);
}

RealEnclosure Disk::modulus() const { return {modulus_lower(), modulus_upper()}; }

bool Disk::disjoint(const Disk& o) const {
  Rational r = radius + o.radius;
  return (center - o.center).norm2() > r * r;
}

bool Disk::contains_zero() const { return center.norm2() <= radius * radius; }

Disk operator+(const Disk& a, const Disk& b) { return {a.center + b.center, a.radius + b.radius}; }
Disk operator-(const Disk& a, const Disk& b) { return {a.center - b.center, a.radius + b.radius}; }

Disk operator*(const Disk& a, const Disk& b) {
  Rational ma = sqrt_upper(a.center.norm2()), mb = sqrt_upper(b.center.norm2());
  return {a.center * b.center, ma * b.radius + mb * a.radius + a.radius * b.radius};
}

Disk operator/(const Disk& a, const Disk& b) {
  Rational mb = sqrt_lower(b.center.norm2());
  if (mb <= b.radius) throw PrecisionError("disk division by a disk that may contain zero");
  Disk inv{ComplexRational(1) / b.center, b.radius / (mb * (mb - b.radius))};
  return a * inv;
}

namespace {

using LD = long double;
using CLD = std::complex<LD>;

ComplexRational to_exact(const CLD& z) {
  Rational re(static_cast<double>(z.real())), im(static_cast<double>(z.imag()));
  return {re, im};
}

Rational round_dyadic(const Rational& q, unsigned long bits) {
  Integer scale = pow(Integer(2), bits);
  Integer n = floor(q * scale + Rational(1, 2));
  return make_rational(n, scale);
}

ComplexRational round_dyadic(const ComplexRational& z, unsigned long bits) {
  return {round_dyadic(z.re, bits), round_dyadic(z.im, bits)};
}

// Floating Aberth-Ehrlich iteration: seeds only, never trusted.
std::vector<CLD> aberth_seeds(const IntPoly& f) {
  std::size_t n = static_cast<std::size_t>(f.degree());
  std::vector<LD> a(n + 1);
  for (std::size_t i = 0; i <= n; ++i) a[i] = static_cast<LD>(f[i].get_d());
  LD rad = 0;
  for (std::size_t i = 0; i < n; ++i)
    rad = std::max(rad, std::pow(std::abs(a[i] / a[n]), 1.0L / static_cast<LD>(n - i)));
  rad = std::max<LD>(rad, 1e-3L);
  std::vector<CLD> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    LD ang = 2 * std::numbers::pi_v<LD> * static_cast<LD>(k) / static_cast<LD>(n) + 0.4L;
    z[k] = std::polar(rad, ang);
  }
  for (int iter = 0; iter < 2000; ++iter) {
    LD worst = 0;
    for (std::size_t k = 0; k < n; ++k) {
      CLD p = 0, dp = 0;
      for (std::size_t i = n + 1; i-- > 0;) {
        dp = dp * z[k] + p;
        p = p * z[k] + a[i];
      }
      if (p == CLD(0)) continue;
      CLD ratio = p / dp;
      CLD s = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) s += 1.0L / (z[k] - z[j]);
      CLD w = ratio / (1.0L - ratio * s);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) continue;
      z[k] -= w;
      worst = std::max(worst, std::abs(w) / std::max<LD>(1, std::abs(z[k])));
    }
    if (worst < 1e-17L) break;
  }
  return z;
}

// One exact Aberth sweep with dyadic rounding of the updated points.
void aberth_polish(const IntPoly& f, std::vector<ComplexRational>& z, unsigned long bits) {
  std::size_t n = z.size();
  for (std::size_t k = 0; k < n; ++k) {
    ComplexRational p = 0, dp = 0;
    for (std::size_t i = n + 1; i-- > 0;) {
      dp = dp * z[k] + p;
      p = p * z[k] + ComplexRational(f[i]);
    }
    if (p.norm2() == 0) continue;
    if (dp.norm2() == 0) continue;
    ComplexRational ratio = p / dp;
    ComplexRational s = 0;
    bool ok = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == k) continue;
      ComplexRational d = z[k] - z[j];
      if (d.norm2() == 0) {
        ok = false;
        break;
      }
      s = s + round_dyadic(ComplexRational(1) / d, bits);
    }
    if (!ok) continue;
    ComplexRational denom = ComplexRational(1) - ratio * s;
    if (denom.norm2() == 0) continue;
    z[k] = round_dyadic(z[k] - ratio / denom, bits);
  }
}

// Pairs approximations into conjugates and pins real ones to the real axis.
void symmetrize(std::vector<ComplexRational>& z) {
  std::size_t n = z.size();
  std::vector<bool> done(n, false);
  for (std::size_t j = 0; j < n; ++j) {
    if (done[j]) continue;
    std::size_t best = j;
    Rational best_d = (z[j] - z[j].conj()).norm2();
    for (std::size_t k = 0; k < n; ++k) {
      if (k == j || done[k]) continue;
      Rational d = (z[j] - z[k].conj()).norm2();
      if (d < best_d) {
        best_d = d;
        best = k;
      }
    }
    done[j] = true;
    if (best == j) {
      z[j].im = 0;
    } else {
      done[best] = true;
      Rational re = (z[j].re + z[best].re) / 2;
      Rational im = (abs(z[j].im) + abs(z[best].im)) / 2;
      z[j] = {re, z[j].im < 0 ? Rational(-im) : im};
      z[best] = z[j].conj();
    }
  }
}

// Inclusion radii n |f(z_j)| / (|a_n| prod |z_j - z_k|); empty on coincident points.
std::vector<Rational> inclusion_radii(const IntPoly& f, const std::vector<ComplexRational>& z) {
  std::size_t n = z.size();
  std::vector<Rational> r(n);
  Rational lead2 = Rational(f.leading() * f.leading());
  for (std::size_t j = 0; j < n; ++j) {
    ComplexRational p = 0;
    for (std::size_t i = n + 1; i-- > 0;) p = p * z[j] + ComplexRational(f[i]);
    Rational denom = lead2;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == j) continue;
      denom *= (z[j] - z[k]).norm2();
    }
    if (denom == 0) return {};
    r[j] = Rational(static_cast<unsigned long>(n)) * sqrt_upper(p.norm2() / denom, 96);
  }
  return r;
}

long magnitude_bits_of_roots(const IntPoly& f) {
  Rational b = cauchy_root_bound(f);
  return static_cast<long>(mpz_sizeinbase(b.get_num_mpz_t(), 2)) -
         static_cast<long>(mpz_sizeinbase(b.get_den_mpz_t(), 2)) + 1;
}

std::vector<Disk> squarefree_root_disks(const IntPoly& f, const Rational& radius) {
  std::size_t n = static_cast<std::size_t>(f.degree());
  if (n == 1) {
    ComplexRational root(make_rational(-f[0], f[1]));
    return {Disk{root, 0}};
  }
  std::vector<CLD> seeds = aberth_seeds(f);
  std::vector<ComplexRational> z;
  for (const auto& s : seeds) z.push_back(to_exact(s));
  unsigned long bits = bits_for_width(radius, magnitude_bits_of_roots(f)) + 8;
  for (int attempt = 0; attempt < 6; ++attempt) {
    for (auto& v : z) v = round_dyadic(v, bits);
    // quadratic convergence: log2(bits / 50) sweeps from a 60-bit seed, plus slack
    int sweeps = 3 + static_cast<int>(std::log2(static_cast<double>(bits) / 50.0 + 1.0)) + attempt * 2;
    for (int s = 0; s < sweeps; ++s) aberth_polish(f, z, bits);
    symmetrize(z);
    std::vector<Rational> r = inclusion_radii(f, z);
    bool ok = !r.empty();
    for (std::size_t j = 0; ok && j < n; ++j)
      if (r[j] > radius) ok = false;
    std::vector<Disk> disks;
    if (ok) {
      for (std::size_t j = 0; j < n; ++j) disks.push_back({z[j], r[j]});
      for (std::size_t j = 0; ok && j < n; ++j)
        for (std::size_t k = j + 1; ok && k < n; ++k)
          if (!disks[j].disjoint(disks[k])) ok = false;
    }
    if (ok) return disks;
    bits = bits * 2;
  }
  throw PrecisionError("could not certify root disks for " + to_string(f));
}

}  // namespace

std::vector<Disk> root_disks(const IntPoly& f, const Rational& radius) {
  if (f.is_zero()) throw DomainError("roots of the zero polynomial");
  if (radius <= 0) throw DomainError("non-positive root radius");
  std::vector<Disk> out;
  for (const auto& [g, mult] : squarefree_decomposition(f)) {
    std::vector<Disk> d = squarefree_root_disks(g, radius);
    for (unsigned m = 0; m < mult; ++m) out.insert(out.end(), d.begin(), d.end());
  }
  std::sort(out.begin(), out.end(), [](const Disk& a, const Disk& b) {
    if (a.center.re != b.center.re) return a.center.re < b.center.re;
    return a.center.im < b.center.im;
  });
  return out;
}

std::vector<RealEnclosure> root_moduli(const IntPoly& f, const Rational& precision) {
  if (f.is_zero() || f.degree() < 1) throw DomainError("root moduli need a nonconstant polynomial");
  Rational radius = precision / 4;
  std::vector<RealEnclosure> out;
  for (const auto& d : root_disks(f, radius)) {
    Rational n2 = d.center.norm2();
    unsigned long bits = bits_for_width(precision, magnitude_bits_of_roots(f)) + 4;
    Rational lo = sqrt_lower(n2, bits) - d.radius, hi = sqrt_upper(n2, bits) + d.radius;
    if (lo < 0) lo = 0;
    out.push_back({lo, hi});
  }
  return out;
}

Rational coefficient_error_bound(const std::vector<Disk>& roots, const Integer& lead) {
  Rational with = 1, without = 1;
  for (const auto& d : roots) {
    Rational m = sqrt_upper(d.center.norm2(), 64);
    with *= 1 + m + d.radius;
    without *= 1 + m;
  }
  return abs(Rational(lead)) * (with - without);
}

std::optional<IntPoly> integer_poly_from_roots(const std::vector<Disk>& roots, const Integer& lead) {
  Rational err = coefficient_error_bound(roots, lead);
  if (err >= Rational(1, 2)) throw PrecisionError("root disks too wide to reconstruct coefficients");
  std::vector<ComplexRational> c{ComplexRational(lead)};
  for (const auto& d : roots) {
    std::vector<ComplexRational> next(c.size() + 1, ComplexRational(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] = next[i + 1] + c[i];
      next[i] = next[i] - c[i] * d.center;
    }
    c = std::move(next);
  }
  std::vector<Integer> out;
  for (const auto& v : c) {
    if (abs(v.im) > err) return std::nullopt;
    Integer k = ceil(v.re - err);
    if (Rational(k) > v.re + err) return std::nullopt;
    out.push_back(k);
  }
  return IntPoly(std::move(out));
}

}  // namespace dioph
