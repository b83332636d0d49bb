#pragma once

#include "dioph/algebraic.hpp"
#include "dioph/multipoly.hpp"
#include "dioph/parallel.hpp"

namespace dioph {

/// A place of Q: a prime p or the archimedean place.
struct Place {
  bool archimedean = true;
  Integer p = 0;

  static Place infinity() { return {true, 0}; }
  static Place prime(const Integer& p);  // DomainError unless p is prime
  friend bool operator==(const Place& a, const Place& b) { return a.archimedean == b.archimedean && a.p == b.p; }
  friend bool operator<(const Place& a, const Place& b) {
    if (a.archimedean != b.archimedean) return !a.archimedean;
    return a.p < b.p;
  }
};

std::string to_string(const Place& v);

/// |q|_v with the standard normalization (|p|_p = 1/p).
Rational abs_at(const Rational& q, const Place& v);

/// The archimedean place and every prime dividing the numerator or denominator.
std::vector<Place> support_places(const Rational& q);

/// Product of |q|_v over S (duplicates ignored); sum of logs is its log.
Rational product_abs_over_S(const Rational& q, const std::vector<Place>& S);

/// sum_{v in S} log|q|_v, as the enclosure of the log of the exact product
/// (a point enclosure when the product is 1).
RealEnclosure sum_log_abs_over_S(const Rational& q, const std::vector<Place>& S,
                                 const Rational& width = Rational(1, 1000000000000L));

struct HeightValue {
  std::optional<Rational> exact;
  RealEnclosure enclosure;

  static HeightValue of_exact(const Rational& q) { return {q, RealEnclosure::point(q)}; }
};

/// h = log H as an enclosure.
RealEnclosure log_height(const HeightValue& h, const Rational& width);

HeightValue height_rational(const Rational& q);  // H(0) = 1

/// Coprime integer coordinates with positive first nonzero entry.
std::vector<Integer> canonical_projective(const std::vector<Rational>& coords);
HeightValue height_projective(const std::vector<Rational>& coords);

HeightValue height_polynomial(const RatPoly& f);
HeightValue height_polynomial(const QPoly& f);

/// Number of roots of f on the unit circle, with multiplicity (exact).
std::size_t unit_circle_root_count(const IntPoly& f);

/// |a_n| prod max(1, |alpha_j|), width <= precision. A point enclosure when
/// the value is exact: every root off the unit circle lies on the same side.
RealEnclosure mahler_measure(const IntPoly& f, const Rational& precision);

/// Exact sign of M(f) - c for squarefree f, resolving ties exactly.
int compare_mahler(const IntPoly& f, const Rational& c);

/// H(alpha) = M(min_poly)^{1/deg}.
HeightValue weil_height_algebraic(const AlgebraicNumber& a, const Rational& precision);

/// Weil height of an element of Q(alpha) through its minimal polynomial.
HeightValue weil_height(const NFElement& a, const Rational& precision);

struct NorthcottEntry {
  IntPoly poly;
  RealEnclosure mahler;
};

inline constexpr int kNorthcottDegreeCap = 12;

/// Irreducible primitive integer polynomials of degree <= degree_max with
/// positive leading coefficient and M(f) <= height_max^deg. Scans the box
/// |a_i| <= C(n,i) height_max^n. Sorted lexicographically by coefficients.
std::vector<NorthcottEntry> northcott_enumerate(int degree_max, const Rational& height_max,
                                                Exec exec = Exec::parallel);

/// Order k when the minimal polynomial is the k-th cyclotomic polynomial.
std::optional<unsigned long> is_root_of_unity(const AlgebraicNumber& a);

}  // namespace dioph
