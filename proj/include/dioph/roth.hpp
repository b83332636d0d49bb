#pragma once

#include "dioph/polyindex.hpp"
#include "dioph/siegel.hpp"

#include <optional>

namespace dioph {

struct IndexSetSpec {
  unsigned m = 1;
  Rational epsilon;
  std::vector<unsigned long> r;
};

void validate(const IndexSetSpec& spec);

struct IndexSetCount {
  Integer count;
  RealEnclosure bound;  // prod (r_h + 1) * exp(-eps^2 m / 16)
};

/// Tuples 0 <= i_h <= r_h with sum i_h / r_h <= m (1 - eps) / 2, counted by
/// dynamic programming over the common denominator of the weights.
IndexSetCount count_index_set(const IndexSetSpec& spec);

/// The multi-indices I with sum i_h / r_h < m (1 - eps) / 2 (strict), by weight.
std::vector<Exponent> vanishing_indices(const IndexSetSpec& spec);

struct AuxPolyResult {
  QPoly poly;
  IndexValue index;
  Rational index_target;  // m (1 - eps) / 2
  HeightValue height;
  RealEnclosure log_height;
  RealEnclosure ratio;  // h(P) / (r_1 + ... + r_m)
  std::size_t vanishing_conditions = 0;
  std::size_t unknowns = 0;
  std::size_t expanded_rows = 0;
  std::size_t effective_rows = 0;  // rank of the expanded system
  Integer sup;                      // max |coefficient|
  Integer a_max;
  std::optional<NFSiegelResult> nf;  // present when unknowns > d * conditions
  std::optional<RealEnclosure> ratio_threshold;  // nf bound / sum r_h
};

/// Nonzero P in Z[x_1..x_m], deg_{x_h} P <= r_h, with d_I P(alpha, ..., alpha) = 0
/// for every vanishing index. Solved through siegel_solve_NF when the
/// unknowns exceed d times the conditions, otherwise through siegel_solve_Z on
/// the independent rows of the power-basis expansion. Throws
/// InfeasibleError when the kernel is trivial, UnsupportedError when alpha is
/// not an algebraic integer.
AuxPolyResult build_aux_poly(const AlgebraicNumber& alpha, const IndexSetSpec& spec);

struct DerivativeHeightCheck {
  RealEnclosure lhs;  // H(d_J P(beta))
  RealEnclosure rhs;  // 4^{sum r} H(P) prod H(beta_h)^{r_h}
  bool holds = false;
};

/// H(P) is max |coefficient| of the integer polynomial P.
DerivativeHeightCheck derivative_height_bound_check(const QPoly& p, const std::vector<Rational>& beta,
                                                    const Exponent& j, const std::vector<unsigned long>& r);
DerivativeHeightCheck derivative_height_bound_check(const QPoly& p, const std::vector<NFElement>& beta,
                                                    const Exponent& j, const std::vector<unsigned long>& r);

struct RothReport {
  bool ratio_hypothesis = false;   // r_{j+1} / r_j <= eta^{2^{m-1}}
  bool height_hypothesis = false;  // eta^{2^{m-1}} min r_h h(beta_h) >= h(P) + 2 m r_1
  bool hypotheses_hold = false;
  RealEnclosure height_lhs;
  RealEnclosure height_rhs;
  IndexValue index;
  Rational conclusion_bound;  // 2 m eta
  bool conclusion_holds = false;
};

/// h(P) is the projective height of the coefficient vector. A counterexample
/// with both hypotheses true raises InternalError.
RothReport roth_lemma_verify(const QPoly& p, const std::vector<Rational>& beta, const std::vector<unsigned long>& r,
                             const Rational& eta);

}  // namespace dioph
