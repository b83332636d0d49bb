#pragma once

// Exact scalars shared by every module: GMP integers and canonical rationals,
// plus the error taxonomy used across the library.

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dioph {

using Integer = mpz_class;
using Rational = mpq_class;

/// Input outside an operation's mathematical domain (zero polynomial, singular
/// matrix, mismatched number fields, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Input is valid but beyond what the implementation supports (degree caps,
/// non-monic generators, ...).
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A certified computation could not be decided within its refinement budget.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A construction has no solution at the requested parameters.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A proven invariant failed: this is a bug, never a property of the input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::invalid_argument(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

Rational make_rational(const Integer& num, const Integer& den);

/// Always "num/den", with den >= 1 (so 3 is "3/1").
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Accepts "n", "n/d", and plain decimals such as "-0.25" or "1e-12".
Rational parse_rational(std::string_view text);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);
Rational abs(const Rational& q);
Integer abs(const Integer& z);

Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);
Integer pow(const Integer& base, unsigned long exp);
Rational pow(const Rational& base, long exp);

/// Positive divisors of a nonzero integer small enough to factor by trial division.
std::vector<Integer> positive_divisors(const Integer& n);

/// Prime factorization (trial division then Pollard rho), ascending primes.
std::vector<std::pair<Integer, unsigned long>> factorize(const Integer& n);

int sign(const Rational& q);
int sign(const Integer& z);

}  // namespace dioph
