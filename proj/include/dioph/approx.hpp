#pragma once

#include "dioph/algebraic.hpp"
#include "dioph/parallel.hpp"

#include <optional>

namespace dioph {

struct ContinuedFraction {
  std::vector<Integer> partial_quotients;
  std::vector<std::pair<Integer, Integer>> convergents;  // (p_k, q_k)
  bool terminated = false;                                // the subject is rational and fully expanded
};

/// Partial quotients by exact floor-and-invert: alpha = F_k(alpha_k) for the
/// Moebius map of the previous convergents, and floor(alpha_k) is found by
/// exact comparisons of alpha with F_k(a). Every convergent is checked to
/// satisfy |alpha - p/q| < 1/q^2 (or to equal alpha).
ContinuedFraction continued_fraction(const AlgebraicNumber& alpha, std::size_t n_terms);

/// Expansion continued until the next denominator would exceed q_max.
ContinuedFraction convergents_up_to(const AlgebraicNumber& alpha, const Integer& q_max);

/// c(alpha) = min{M, 1 / (|a_n| (3M)^{n-1})}, M the largest root modulus.
RealEnclosure liouville_constant(const AlgebraicNumber& alpha, const Rational& precision = Rational(1, 1000000));

struct LiouvilleViolation {
  Integer p, q;
};

struct LiouvilleScan {
  std::vector<LiouvilleViolation> violations;
  std::size_t checked = 0;
  RealEnclosure constant;
};

/// Certifies |alpha - p/q| > c(alpha) / q^n for every convergent with
/// q <= q_max and every p/q adjacent to q alpha with q <= min(q_max, sweep).
LiouvilleScan liouville_scan(const AlgebraicNumber& alpha, const Integer& q_max, unsigned long sweep = 1000);

struct ApproxRecord {
  Integer p, q;
  RealEnclosure error;                    // |alpha - p/q|
  std::optional<RealEnclosure> exponent;  // -log error / log q, q >= 2
  RealEnclosure scaled_error;             // q^2 |alpha - p/q|
  bool dirichlet = false;                 // error < 1/q^2, exact
};

/// Error enclosure with relative width at most 2^-30.
ApproxRecord approximation_record(const AlgebraicNumber& alpha, const Integer& p, const Integer& q);

struct ExponentReport {
  std::vector<ApproxRecord> records;
  std::size_t dirichlet_count = 0;
  RealEnclosure hurwitz_liminf;  // min q^2 |alpha - p/q| over the later half of the records
  std::optional<RealEnclosure> max_exponent;
};

/// Records for the convergents with q_min <= q <= q_max.
ExponentReport exponent_report(const AlgebraicNumber& alpha, const Integer& q_max, Exec exec = Exec::parallel,
                               const Integer& q_min = Integer(1));

}  // namespace dioph
