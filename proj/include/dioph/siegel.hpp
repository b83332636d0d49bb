#pragma once

#include "dioph/heights.hpp"
#include "dioph/linalg.hpp"

namespace dioph {

struct SiegelResult {
  IntVector x;
  std::size_t rows = 0;
  std::size_t cols = 0;
  Integer a_max;            // max |a_ij|
  Integer sup;              // max |x_i|
  std::size_t kernel_rank = 0;
  bool minimal = false;  // the walk finished, so x has the least sup norm
};

inline constexpr std::size_t kSiegelNodeBudget = 400000;

/// max|x_i|^{N-M} < (N * a_max)^M, in integers.
bool siegel_bound_holds(const IntVector& x, std::size_t rows, std::size_t cols, const Integer& a_max);

/// Small nonzero integer solution of A x = 0 in the sup norm.
///
/// The integer kernel lattice comes from unimodular column reduction and is
/// LLL-reduced; an exact ellipsoid walk then collects every kernel vector of
/// sup norm at most the best basis vector's, within kSiegelNodeBudget
/// search nodes (beyond that the best vector found is returned). Ties are broken by the support
/// positions (lexicographic), then values, with the first nonzero entry
/// positive. Throws InternalError if the result misses the Siegel bound.
SiegelResult siegel_solve_Z(const IntRows& a);

/// Proof-style pigeonhole search over [0, H]^N with H the least value that
/// forces a collision; N <= 6 and a box cap. Returns the first collision's
/// difference vector.
IntVector siegel_pigeonhole(const IntRows& a);

/// Canonical sign (first nonzero positive) and tie order used by the solver.
void canonical_sign(IntVector& x);
bool siegel_order_less(const IntVector& a, const IntVector& b);

struct NFMatrix {
  NFElement::Base base;
  std::vector<std::vector<NFElement>> entries;
  std::size_t rows() const { return entries.size(); }
  std::size_t cols() const { return entries.empty() ? 0 : entries[0].size(); }
};

/// Power-basis expansion: each row scaled by the lcm of its denominators,
/// then split into d integer rows (coefficient of alpha^k).
IntRows expand_nf_rows(const NFMatrix& a);

struct NFSiegelResult {
  IntVector x;
  std::size_t degree = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  SiegelResult expanded;     // the integer system actually solved
  HeightValue height;        // H(x) as a projective point
  RealEnclosure c1;          // operator norm of the inverse embedding matrix
  RealEnclosure log_c1;      // c(K) = log c1
  RealEnclosure conj_max;    // max |sigma_r(a_ij)| over row-scaled entries
  RealEnclosure bound;       // dM/(N-dM) (log conj_max + log N + log c1)
  bool bound_holds = false;  // h(x) <= bound.hi
};

/// Nonzero x in Z^N with A x = 0 in Q(alpha), through the expanded integer
/// system; the generator's minimal polynomial must be monic.
NFSiegelResult siegel_solve_NF(const NFMatrix& a);

/// ||V^{-1}||_inf for V_{rk} = sigma_r(alpha)^k, enclosed at about `precision`.
RealEnclosure embedding_constant(const AlgebraicNumber& alpha, const Rational& precision);

}  // namespace dioph
