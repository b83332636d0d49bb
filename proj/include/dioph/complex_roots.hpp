#pragma once

#include "dioph/enclosure.hpp"
#include "dioph/poly.hpp"

#include <vector>

namespace dioph {

struct ComplexRational {
  Rational re;
  Rational im;

  ComplexRational() = default;
  ComplexRational(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}
  ComplexRational(const Integer& r) : re(r), im(0) {}
  ComplexRational(int r) : re(r), im(0) {}

  Rational norm2() const { return re * re + im * im; }
  ComplexRational conj() const { return {re, -im}; }

  friend ComplexRational operator+(const ComplexRational& a, const ComplexRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexRational operator-(const ComplexRational& a, const ComplexRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ComplexRational operator/(const ComplexRational& a, const ComplexRational& b) {
    Rational n = b.norm2();
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  friend bool operator==(const ComplexRational& a, const ComplexRational& b) { return a.re == b.re && a.im == b.im; }
};

/// Closed disk in C with exact rational center and radius. Arithmetic on
/// disks is outward (circular interval arithmetic): the result disk contains
/// every value reachable from points of the operand disks.
struct Disk {
  ComplexRational center;
  Rational radius;

  Rational modulus_upper() const;  // upper bound of |z| over the disk
  Rational modulus_lower() const;  // lower bound, clipped at 0
  RealEnclosure modulus() const;
  bool disjoint(const Disk& o) const;
  bool contains_zero() const;

  friend Disk operator+(const Disk& a, const Disk& b);
  friend Disk operator-(const Disk& a, const Disk& b);
  friend Disk operator*(const Disk& a, const Disk& b);
  friend Disk operator/(const Disk& a, const Disk& b);  // b must exclude 0
};

/// One certified disk per root (with multiplicity) of f, each isolating its
/// root among the distinct roots. Conjugate roots get conjugate disks and
/// real roots get real centers. Sorted by (center.re, center.im): this is the
/// canonical conjugate order. Radii are at most `radius`.
///
/// Approximations come from Aberth iteration in GMP floating point; each disk
/// is certified with the Weierstrass-correction inclusion theorem (a
/// connected union of k disks of radius n|W_j| holds exactly k roots) using
/// exact rational arithmetic.
std::vector<Disk> root_disks(const IntPoly& f, const Rational& radius);

/// Moduli of all roots of f (with multiplicity), each enclosure at most
/// `precision` wide, in canonical conjugate order per squarefree factor.
/// Throws PrecisionError if certification fails within the refinement budget.
std::vector<RealEnclosure> root_moduli(const IntPoly& f, const Rational& precision);

/// Reconstructs l * prod_{j in subset} (x - root_j) as an integer polynomial
/// when the disk radii pin every coefficient to a unique integer.
/// Returns nullopt if some coefficient interval contains no integer (or the
/// imaginary part cannot vanish); throws PrecisionError when the radii are too
/// wide to pin coefficients down.
std::optional<IntPoly> integer_poly_from_roots(const std::vector<Disk>& roots, const Integer& lead);

/// Error bound used by integer_poly_from_roots: every coefficient of
/// lead * prod (x - w_j), |w_j - c_j| <= r_j, lies within this distance of the
/// corresponding coefficient computed from the centers.
Rational coefficient_error_bound(const std::vector<Disk>& roots, const Integer& lead);

}  // namespace dioph
