#pragma once

#include "dioph/poly.hpp"

#include <vector>

namespace dioph {

/// A rational interval isolating one real root. Either degenerate (lo == hi,
/// the root is rational) or open (lo < hi, neither endpoint is a root).
struct IsolatingInterval {
  Rational lo;
  Rational hi;
  bool exact() const { return lo == hi; }
};

/// Sturm chain of a squarefree polynomial, kept primitive with positive
/// scaling so signs are preserved.
class SturmSequence {
 public:
  explicit SturmSequence(const IntPoly& squarefree);
  /// Sign variations at x (zeros skipped).
  int variations(const Rational& x) const;
  /// Distinct roots in (a, b]; requires a < b.
  int count(const Rational& a, const Rational& b) const;
  const std::vector<IntPoly>& chain() const { return chain_; }

 private:
  std::vector<IntPoly> chain_;
};

/// Disjoint isolating intervals for the distinct real roots of f, in
/// ascending order. The squarefree part is taken internally.
std::vector<IsolatingInterval> isolate_real_roots(const IntPoly& f);

/// Number of distinct real roots of f in the closed interval [a, b].
int count_real_roots(const IntPoly& f, const Rational& a, const Rational& b);

/// Shrinks an isolating interval of a squarefree f to width <= width by
/// bisection on the sign of f.
IsolatingInterval refine_root(const IntPoly& squarefree, IsolatingInterval iv, const Rational& width);

}  // namespace dioph
