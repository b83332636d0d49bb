#include "dioph/enclosure.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>

namespace dioph {

RealEnclosure::RealEnclosure(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
  if (lo > hi) throw InternalError("enclosure with lo > hi");
}

RealEnclosure operator+(const RealEnclosure& a, const RealEnclosure& b) { return {a.lo + b.lo, a.hi + b.hi}; }
RealEnclosure operator-(const RealEnclosure& a, const RealEnclosure& b) { return {a.lo - b.hi, a.hi - b.lo}; }

RealEnclosure operator*(const RealEnclosure& a, const RealEnclosure& b) {
  Rational c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
}

RealEnclosure operator*(const Rational& s, const RealEnclosure& a) {
  return s >= 0 ? RealEnclosure{s * a.lo, s * a.hi} : RealEnclosure{s * a.hi, s * a.lo};
}

RealEnclosure operator/(const RealEnclosure& a, const RealEnclosure& b) {
  if (b.contains(0)) throw DomainError("interval division by an enclosure containing zero");
  return a * RealEnclosure{1 / b.hi, 1 / b.lo};
}

RealEnclosure pow(const RealEnclosure& a, unsigned long n) {
  RealEnclosure r = RealEnclosure::point(1);
  for (unsigned long i = 0; i < n; ++i) r = r * a;
  if (n % 2 == 0 && r.lo < 0) r.lo = 0;
  return r;
}

RealEnclosure hull(const RealEnclosure& a, const RealEnclosure& b) {
  return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

RealEnclosure max(const RealEnclosure& a, const RealEnclosure& b) {
  return {std::max(a.lo, b.lo), std::max(a.hi, b.hi)};
}

RealEnclosure min(const RealEnclosure& a, const RealEnclosure& b) {
  return {std::min(a.lo, b.lo), std::min(a.hi, b.hi)};
}

RealEnclosure abs(const RealEnclosure& a) {
  if (a.lo >= 0) return a;
  if (a.hi <= 0) return {-a.hi, -a.lo};
  return {0, std::max(Rational(-a.lo), a.hi)};
}

unsigned long bits_for_width(const Rational& width, long magnitude_bits) {
  if (width <= 0) throw DomainError("non-positive enclosure width");
  long w = static_cast<long>(mpz_sizeinbase(width.get_den_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(width.get_num_mpz_t(), 2)) + 2;
  long bits = std::max(0L, w) + std::max(0L, magnitude_bits) + 24;
  return static_cast<unsigned long>(std::max(64L, bits));
}

namespace {

// RAII wrapper; MPFR values never escape this file.
class Mp {
 public:
  explicit Mp(unsigned long bits) { mpfr_init2(v_, static_cast<mpfr_prec_t>(bits)); }
  ~Mp() { mpfr_clear(v_); }
  Mp(const Mp&) = delete;
  Mp& operator=(const Mp&) = delete;
  mpfr_ptr get() { return v_; }

  Rational to_rational() const {
    if (!mpfr_number_p(v_)) throw PrecisionError("non-finite MPFR result");
    if (mpfr_zero_p(v_)) return 0;
    Integer m;
    mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), v_);
    Rational q(m);
    if (e > 0) q *= pow(Integer(2), static_cast<unsigned long>(e));
    if (e < 0) q /= pow(Integer(2), static_cast<unsigned long>(-e));
    q.canonicalize();
    return q;
  }

 private:
  mpfr_t v_;
};

long magnitude_bits(const Rational& q) {
  if (q == 0) return 0;
  return static_cast<long>(mpz_sizeinbase(q.get_num_mpz_t(), 2)) -
         static_cast<long>(mpz_sizeinbase(q.get_den_mpz_t(), 2));
}

// Upper bound on log2|log x| style magnitudes, used to size the mantissa.
long log_magnitude(const Rational& q) {
  long m = std::abs(magnitude_bits(q)) + 1;
  return static_cast<long>(std::ceil(std::log2(static_cast<double>(m) + 1.0))) + 1;
}

}  // namespace

RealEnclosure log_enclosure(const Rational& q, const Rational& width) {
  return log_enclosure(RealEnclosure::point(q), width);
}

RealEnclosure log_enclosure(const RealEnclosure& x, const Rational& width) {
  if (x.lo <= 0) throw DomainError("log of a non-positive enclosure");
  unsigned long bits = bits_for_width(width, std::max(log_magnitude(x.lo), log_magnitude(x.hi)));
  Mp lo(bits), hi(bits);
  mpfr_set_q(lo.get(), x.lo.get_mpq_t(), MPFR_RNDD);
  mpfr_log(lo.get(), lo.get(), MPFR_RNDD);
  mpfr_set_q(hi.get(), x.hi.get_mpq_t(), MPFR_RNDU);
  mpfr_log(hi.get(), hi.get(), MPFR_RNDU);
  return {lo.to_rational(), hi.to_rational()};
}

RealEnclosure exp_enclosure(const RealEnclosure& x, const Rational& width) {
  // exp(x) has about x/ln2 integer bits
  long mag = static_cast<long>(std::abs(x.hi.get_d()) * 1.5) + 2;
  unsigned long bits = bits_for_width(width, mag);
  Mp lo(bits), hi(bits);
  mpfr_set_q(lo.get(), x.lo.get_mpq_t(), MPFR_RNDD);
  mpfr_exp(lo.get(), lo.get(), MPFR_RNDD);
  mpfr_set_q(hi.get(), x.hi.get_mpq_t(), MPFR_RNDU);
  mpfr_exp(hi.get(), hi.get(), MPFR_RNDU);
  return {lo.to_rational(), hi.to_rational()};
}

RealEnclosure root_enclosure(const RealEnclosure& x, unsigned long n, const Rational& width) {
  if (n == 0) throw DomainError("zeroth root");
  if (x.lo < 0) throw DomainError("root of a negative enclosure");
  if (n == 1) return x;
  unsigned long bits = bits_for_width(width, magnitude_bits(x.hi) / static_cast<long>(n) + 1);
  Mp lo(bits), hi(bits);
  mpfr_set_q(lo.get(), x.lo.get_mpq_t(), MPFR_RNDD);
  mpfr_rootn_ui(lo.get(), lo.get(), n, MPFR_RNDD);
  mpfr_set_q(hi.get(), x.hi.get_mpq_t(), MPFR_RNDU);
  mpfr_rootn_ui(hi.get(), hi.get(), n, MPFR_RNDU);
  return {lo.to_rational(), hi.to_rational()};
}

RealEnclosure sqrt_enclosure(const Rational& q, const Rational& width) {
  return root_enclosure(RealEnclosure::point(q), 2, width);
}

Rational sqrt_upper(const Rational& q, unsigned long bits) {
  if (q < 0) throw DomainError("sqrt of a negative rational");
  if (q == 0) return 0;
  Mp v(bits);
  mpfr_set_q(v.get(), q.get_mpq_t(), MPFR_RNDU);
  mpfr_sqrt(v.get(), v.get(), MPFR_RNDU);
  return v.to_rational();
}

Rational sqrt_lower(const Rational& q, unsigned long bits) {
  if (q < 0) throw DomainError("sqrt of a negative rational");
  if (q == 0) return 0;
  Mp v(bits);
  mpfr_set_q(v.get(), q.get_mpq_t(), MPFR_RNDD);
  mpfr_sqrt(v.get(), v.get(), MPFR_RNDD);
  return v.to_rational();
}

int certified_compare(const std::function<RealEnclosure(const Rational&)>& f, const Rational& target,
                      Rational width, const Rational& factor, int max_rounds) {
  for (int round = 0; round <= max_rounds; ++round) {
    RealEnclosure e = f(width);
    if (e.hi < target) return -1;
    if (e.lo > target) return 1;
    if (e.lo == target && e.hi == target) return 0;
    width *= factor;
  }
  throw PrecisionError("comparison undecided after refinement");
}

int certified_compare(const std::function<RealEnclosure(const Rational&)>& f,
                      const std::function<RealEnclosure(const Rational&)>& g, Rational width,
                      const Rational& factor, int max_rounds) {
  for (int round = 0; round <= max_rounds; ++round) {
    RealEnclosure a = f(width), b = g(width);
    if (a.hi < b.lo) return -1;
    if (a.lo > b.hi) return 1;
    if (a.is_point() && b.is_point() && a.lo == b.lo) return 0;
    width *= factor;
  }
  throw PrecisionError("comparison undecided after refinement");
}

}  // namespace dioph
