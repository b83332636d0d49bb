#pragma once

#include "dioph/multipoly.hpp"
#include "dioph/parallel.hpp"

namespace dioph {

inline constexpr std::size_t kWronskianFamilyCap = 6;

/// det(d_{mu_i} phi_j) expanded exactly; requires |mu_i| <= i - 1 (1-based).
QPoly generalized_wronskian(const std::vector<QPoly>& phis, const std::vector<Exponent>& mus);

/// Rank of the family's coefficient matrix over Q.
std::size_t coefficient_rank(const std::vector<QPoly>& phis);

/// Admissible tuples (mu_1, ..., mu_n) with pairwise distinct entries and
/// total order s, in lexicographic order of the per-position graded-lex rank.
std::vector<std::vector<Exponent>> admissible_tuples(std::size_t n, std::size_t arity, unsigned s);

struct IndependenceResult {
  bool independent = false;
  std::vector<Exponent> witness;  // empty when dependent
  std::size_t rank = 0;
  std::size_t tuples_checked = 0;
  bool exhaustive = false;  // every admissible Wronskian was evaluated
};

/// Tuples are walked by total order, then lexicographically; the first
/// nonzero Wronskian is the witness. The verdict must agree with the rank
/// test (InternalError otherwise). Dependent families are searched
/// exhaustively when at most `exhaustive_cap` tuples are admissible.
IndependenceResult are_linearly_independent(const std::vector<QPoly>& phis, Exec exec = Exec::parallel,
                                            std::size_t exhaustive_cap = 20000);

}  // namespace dioph
