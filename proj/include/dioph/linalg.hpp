#pragma once

// Small exact linear algebra over Z and Q: determinants, echelon forms,
// integer kernel lattices and LLL reduction. Matrices are row-major nested
// vectors; dimensions at desk scale (tens) keep this adequate.

#include "dioph/arith.hpp"

#include <functional>
#include <vector>

namespace dioph {

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;
using IntRows = std::vector<IntVector>;
using RatRows = std::vector<RatVector>;

/// Fraction-free Gaussian elimination; square input.
Integer bareiss_determinant(IntRows m);
Rational determinant(RatRows m);

struct Echelon {
  RatRows rows;                      // reduced row echelon form (nonzero rows only)
  std::vector<std::size_t> pivots;   // pivot column of each row
};
Echelon reduced_row_echelon(RatRows m);
std::size_t rank(const RatRows& m);
std::size_t rank(const IntRows& m);

/// Basis of the rational null space {x : m x = 0}, one vector per free column,
/// with a 1 in that free column.
RatRows rational_kernel(const RatRows& m, std::size_t cols);

RatRows inverse(const RatRows& m);

/// Basis of the full integer lattice {x in Z^cols : m x = 0}, from unimodular
/// column reduction (the transform's trailing columns).
IntRows integer_kernel_basis(const IntRows& m, std::size_t cols);

/// In-place LLL reduction (delta = 3/4) of linearly independent integer rows.
void lll_reduce(IntRows& basis);

RatRows to_rational(const IntRows& m);

}  // namespace dioph

namespace dioph {

/// Exact Fincke-Pohst enumeration of nonzero integer vectors y with
/// y^T G y <= bound, for a positive definite rational Gram matrix G.
/// The visitor may lower `bound` while the walk is running.
class EllipsoidEnumerator {
 public:
  using Visitor = std::function<void(const IntVector&, Rational& bound)>;

  explicit EllipsoidEnumerator(const RatRows& gram);
  std::size_t dimension() const { return d_.size(); }
  /// Range of the last coordinate for the given bound.
  std::pair<Integer, Integer> top_range(const Rational& bound) const;
  /// Vectors whose last coordinate equals `top`. Each call to enumerate_top
  /// or enumerate spends at most `node_limit` search nodes and returns false
  /// when it stopped early.
  bool enumerate_top(const Integer& top, Rational& bound, const Visitor& visit,
                     std::size_t node_limit = static_cast<std::size_t>(-1)) const;
  bool enumerate(Rational& bound, const Visitor& visit, std::size_t node_limit = static_cast<std::size_t>(-1)) const;

 private:
  bool walk(std::size_t level, IntVector& y, const Rational& acc, Rational& bound, const Visitor& visit,
            std::size_t& nodes) const;
  RatVector d_;    // LDL^T diagonal
  RatRows u_;      // unit upper triangular factor
};

}  // namespace dioph
