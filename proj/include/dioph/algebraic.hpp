#pragma once

#include "dioph/complex_roots.hpp"
#include "dioph/real_roots.hpp"

#include <memory>
#include <variant>

namespace dioph {

/// Index into the canonical root order of a minimal polynomial (see root_disks).
struct ConjugateIndex {
  std::size_t index;
  friend bool operator==(const ConjugateIndex&, const ConjugateIndex&) = default;
};

/// A root of an irreducible primitive integer polynomial with positive
/// leading coefficient, selected either by a rational isolating interval
/// (real roots) or by a conjugate index.
class AlgebraicNumber {
 public:
  using Selector = std::variant<IsolatingInterval, ConjugateIndex>;

  static AlgebraicNumber rational(const Rational& q);
  /// The k-th real root of f in ascending order (f is normalized, and must be irreducible).
  static AlgebraicNumber real_root(const IntPoly& f, std::size_t k);
  static AlgebraicNumber from_interval(const IntPoly& f, const IsolatingInterval& iv);
  static AlgebraicNumber conjugate(const IntPoly& f, std::size_t index);

  const IntPoly& min_poly() const { return f_; }
  std::size_t degree() const { return static_cast<std::size_t>(f_.degree()); }
  const Selector& selector() const { return sel_; }
  bool is_real() const;
  std::optional<Rational> rational_value() const;

  /// Position in the canonical conjugate order.
  std::size_t canonical_index() const;
  /// Isolating interval; real numbers only.
  IsolatingInterval interval() const;
  RealEnclosure enclosure(const Rational& width) const;
  Disk disk(const Rational& radius) const;
  /// Exact sign of (this - t); real numbers only.
  int compare(const Rational& t) const;

  bool same_number(const AlgebraicNumber& o) const;

 private:
  AlgebraicNumber(IntPoly f, Selector s) : f_(std::move(f)), sel_(std::move(s)) {}
  IntPoly f_;
  Selector sel_;
};

/// Element of Q(alpha) in the power basis 1, alpha, ..., alpha^{d-1}.
class NFElement {
 public:
  using Base = std::shared_ptr<const AlgebraicNumber>;

  NFElement(Base base, const RatPoly& rep);
  NFElement(Base base, const Rational& q);
  static NFElement generator(Base base);

  const Base& base() const { return base_; }
  const RatPoly& rep() const { return rep_; }
  std::size_t field_degree() const { return base_->degree(); }
  bool is_zero() const { return rep_.is_zero(); }
  std::optional<Rational> rational_value() const;

  NFElement pow(unsigned long k) const;
  /// Image under the embedding alpha -> root, as a disk around the root disk.
  Disk embed(const Disk& root) const;

  friend NFElement operator+(const NFElement& a, const NFElement& b);
  friend NFElement operator-(const NFElement& a, const NFElement& b);
  friend NFElement operator-(const NFElement& a);
  friend NFElement operator*(const NFElement& a, const NFElement& b);
  friend NFElement operator*(const Rational& s, const NFElement& a);
  friend bool operator==(const NFElement& a, const NFElement& b);

 private:
  Base base_;
  RatPoly rep_;
};

/// Throws DomainError unless a and b live over the same generator.
void require_same_field(const NFElement::Base& a, const NFElement::Base& b);

NFElement nf_mul(const NFElement& a, const NFElement& b);

/// Characteristic polynomial of multiplication by a on Q(alpha), as a
/// primitive integer polynomial with positive leading coefficient.
IntPoly characteristic_poly(const NFElement& a);

/// Minimal polynomial of a (primitive squarefree part of its characteristic polynomial).
IntPoly element_min_poly(const NFElement& a);

/// Minimal polynomial of alpha^m, m != 0.
IntPoly power_min_poly(const AlgebraicNumber& a, long m);

std::string to_string(const NFElement& a);

}  // namespace dioph
