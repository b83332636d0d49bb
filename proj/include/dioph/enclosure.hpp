#pragma once

#include "dioph/arith.hpp"

#include <functional>

namespace dioph {

/// A closed rational interval [lo, hi] certified to contain a real value.
///
/// All irrational quantities in the library (heights, Mahler measures, log
/// heights, approximation errors) travel as enclosures. Arithmetic is plain
/// rational interval arithmetic, so it never loses the containment property.
struct RealEnclosure {
  Rational lo;
  Rational hi;

  RealEnclosure() = default;
  RealEnclosure(Rational l, Rational h);
  static RealEnclosure point(const Rational& q) { return {q, q}; }

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rational& q) const { return lo <= q && q <= hi; }
  bool overlaps(const RealEnclosure& o) const { return lo <= o.hi && o.lo <= hi; }
  bool is_point() const { return lo == hi; }
  double approx() const { return midpoint().get_d(); }
};

RealEnclosure operator+(const RealEnclosure& a, const RealEnclosure& b);
RealEnclosure operator-(const RealEnclosure& a, const RealEnclosure& b);
RealEnclosure operator*(const RealEnclosure& a, const RealEnclosure& b);
RealEnclosure operator*(const Rational& s, const RealEnclosure& a);
RealEnclosure operator/(const RealEnclosure& a, const RealEnclosure& b);  // 0 not in b
RealEnclosure pow(const RealEnclosure& a, unsigned long n);
RealEnclosure hull(const RealEnclosure& a, const RealEnclosure& b);
RealEnclosure max(const RealEnclosure& a, const RealEnclosure& b);
RealEnclosure min(const RealEnclosure& a, const RealEnclosure& b);
RealEnclosure abs(const RealEnclosure& a);

/// Bits of working precision that make an MPFR result about `width` wide
/// for values of magnitude up to 2^magnitude_bits.
unsigned long bits_for_width(const Rational& width, long magnitude_bits = 0);

// Outward-rounded transcendental enclosures. `width` is a target; the result
// width may exceed it when the input enclosure itself is wider.
RealEnclosure log_enclosure(const Rational& q, const Rational& width);
RealEnclosure log_enclosure(const RealEnclosure& x, const Rational& width);
RealEnclosure exp_enclosure(const RealEnclosure& x, const Rational& width);
RealEnclosure root_enclosure(const RealEnclosure& x, unsigned long n, const Rational& width);
RealEnclosure sqrt_enclosure(const Rational& q, const Rational& width);

Rational sqrt_upper(const Rational& q, unsigned long bits = 128);
Rational sqrt_lower(const Rational& q, unsigned long bits = 128);

/// Compares the value enclosed by `f(width)` against `target`, tightening the
/// width by `factor` per round. Returns -1, 0 (only when the enclosure
/// collapses to the point target), or +1; throws PrecisionError when
/// `max_rounds` refinements leave the comparison undecided.
int certified_compare(const std::function<RealEnclosure(const Rational&)>& f, const Rational& target,
                      Rational width = Rational(1, 1000000), const Rational& factor = Rational(1, 10000),
                      int max_rounds = 5);

/// Same, against another refinable value.
int certified_compare(const std::function<RealEnclosure(const Rational&)>& f,
                      const std::function<RealEnclosure(const Rational&)>& g,
                      Rational width = Rational(1, 1000000), const Rational& factor = Rational(1, 10000),
                      int max_rounds = 5);

}  // namespace dioph
