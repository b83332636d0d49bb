#pragma once

#include "dioph/poly.hpp"

namespace dioph {

inline constexpr long kIrreducibilityDegreeCap = 12;

/// Irreducibility over Q (content is ignored). Degree 1 is irreducible.
///
/// Non-squarefree input and input with a rational root are rejected first.
/// Otherwise every candidate factor l * prod_{j in S} (x - root_j), S a
/// conjugation-closed set of at most deg/2 certified roots and l a positive
/// divisor of the leading coefficient, is reconstructed with integer
/// coefficients from the root disks and tried by exact division.
bool is_irreducible(const IntPoly& f);

/// Rational roots of f, ascending, without multiplicity.
std::vector<Rational> rational_roots(const IntPoly& f);

}  // namespace dioph
