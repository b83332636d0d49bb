#pragma once

#include "dioph/arith.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dioph {

/// Dense univariate polynomial, coefficients in ascending degree. The zero
/// polynomial has no coefficients; otherwise the last coefficient is nonzero.
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

  static Polynomial constant(const T& v) { return Polynomial(std::vector<T>{v}); }
  static Polynomial monomial(const T& v, std::size_t deg) {
    std::vector<T> c(deg + 1, T(0));
    c[deg] = v;
    return Polynomial(std::move(c));
  }
  static Polynomial x() { return monomial(T(1), 1); }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<T>& coeffs() const { return c_; }
  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
  const T& leading() const { return c_.back(); }
  const T& operator[](std::size_t i) const { return c_[i]; }
  std::size_t size() const { return c_.size(); }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const T& s) {
    for (auto& v : c_) v *= s;
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
  friend Polynomial operator*(const T& s, Polynomial a) { return a *= s; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  template <class U>
  U evaluate(const U& x) const {
    U acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + U(*it);
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * T(static_cast<unsigned long>(i));
    return Polynomial(std::move(r));
  }

  /// x^deg f(1/x); only meaningful for f(0) != 0 to keep the degree.
  Polynomial reversed() const {
    std::vector<T> r(c_.rbegin(), c_.rend());
    return Polynomial(std::move(r));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<T> c_;
};

using IntPoly = Polynomial<Integer>;
using RatPoly = Polynomial<Rational>;

RatPoly to_rational(const IntPoly& f);

/// (content, primitive part) with content > 0 and content * primitive = f.
std::pair<Integer, IntPoly> content_and_primitive(const IntPoly& f);

/// Clears denominators and removes the content: the primitive integer
/// polynomial proportional to f, with positive leading coefficient.
IntPoly primitive_integer_form(const RatPoly& f);

/// Primitive with positive leading coefficient.
IntPoly normalize_primitive(const IntPoly& f);

struct DivMod {
  RatPoly quotient;
  RatPoly remainder;
};
DivMod divmod(const RatPoly& a, const RatPoly& b);
RatPoly rem(const RatPoly& a, const RatPoly& b);

/// Exact quotient in Z[x], if b divides a.
std::optional<IntPoly> exact_divide(const IntPoly& a, const IntPoly& b);

/// Monic gcd over Q.
RatPoly gcd(const RatPoly& a, const RatPoly& b);
IntPoly gcd(const IntPoly& a, const IntPoly& b);  // primitive, positive leading

IntPoly squarefree_part(const IntPoly& f);

/// Yun decomposition: f = c * prod g_i^{m_i}, each g_i squarefree primitive
/// with positive leading coefficient, pairwise coprime.
std::vector<std::pair<IntPoly, unsigned>> squarefree_decomposition(const IntPoly& f);

int sign_at(const IntPoly& f, const Rational& x);
Rational evaluate(const IntPoly& f, const Rational& x);

/// f(x + a) as a polynomial in x.
RatPoly taylor_shift(const RatPoly& f, const Rational& a);

/// Sylvester-matrix resultant, computed by fraction-free elimination.
Integer resultant(const IntPoly& f, const IntPoly& g);

/// 1 + max |a_i / a_n|: every complex root has modulus below this.
Rational cauchy_root_bound(const IntPoly& f);

/// The k-th cyclotomic polynomial.
IntPoly cyclotomic(unsigned long k);

unsigned long euler_phi(unsigned long k);

std::string to_string(const IntPoly& f, char var = 'x');
std::string to_string(const RatPoly& f, char var = 'x');

}  // namespace dioph
