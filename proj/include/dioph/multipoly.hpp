#pragma once

// Sparse multivariate polynomials over Q or Q(alpha), normalized partial
// derivatives and the weighted index at a point.

#include "dioph/algebraic.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace dioph {

using Exponent = std::vector<unsigned>;

inline bool scalar_is_zero(const Rational& q) { return q == 0; }
inline bool scalar_is_zero(const NFElement& a) { return a.is_zero(); }
inline Rational one_like(const Rational&) { return 1; }
inline NFElement one_like(const NFElement& a) { return NFElement(a.base(), Rational(1)); }

template <class S>
class MultiPoly {
 public:
  using Terms = std::map<Exponent, S>;

  explicit MultiPoly(std::size_t arity = 1) : arity_(arity) {}
  MultiPoly(std::size_t arity, Terms terms) : arity_(arity) {
    for (auto& [e, c] : terms) add_term(e, c);
  }
  static MultiPoly constant(std::size_t arity, const S& c) {
    MultiPoly p(arity);
    p.add_term(Exponent(arity, 0), c);
    return p;
  }
  /// x_h, scaled by `one`.
  static MultiPoly variable(std::size_t arity, std::size_t h, const S& one) {
    MultiPoly p(arity);
    Exponent e(arity, 0);
    e.at(h) = 1;
    p.add_term(e, one);
    return p;
  }

  std::size_t arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  const S* find(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? nullptr : &it->second;
  }

  void add_term(const Exponent& e, const S& c) {
    if (e.size() != arity_) throw DomainError("exponent length does not match arity");
    if (scalar_is_zero(c)) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
      return;
    }
    it->second = it->second + c;
    if (scalar_is_zero(it->second)) terms_.erase(it);
  }

  unsigned partial_degree(std::size_t h) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[h]);
    return d;
  }
  std::vector<unsigned> partial_degrees() const {
    std::vector<unsigned> d(arity_, 0);
    for (const auto& [e, c] : terms_)
      for (std::size_t h = 0; h < arity_; ++h) d[h] = std::max(d[h], e[h]);
    return d;
  }
  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0u));
    return d;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) {
    a.check_arity(b);
    for (const auto& [e, c] : b.terms_) a.add_term(e, c);
    return a;
  }
  friend MultiPoly operator-(const MultiPoly& a) {
    MultiPoly r(a.arity_);
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
    return r;
  }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) {
    a.check_arity(b);
    for (const auto& [e, c] : b.terms_) a.add_term(e, -c);
    return a;
  }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_arity(b);
    MultiPoly r(a.arity_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e(a.arity_);
        for (std::size_t h = 0; h < a.arity_; ++h) e[h] = ea[h] + eb[h];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  friend MultiPoly operator*(const Rational& s, const MultiPoly& a) {
    MultiPoly r(a.arity_);
    for (const auto& [e, c] : a.terms_) r.add_term(e, s * c);
    return r;
  }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.arity_ != b.arity_ || a.terms_.size() != b.terms_.size()) return false;
    auto ib = b.terms_.begin();
    for (const auto& [e, c] : a.terms_) {
      if (e != ib->first || !(c == ib->second)) return false;
      ++ib;
    }
    return true;
  }

  MultiPoly pow(unsigned k) const {
    if (terms_.empty()) {
      if (k == 0) throw DomainError("zero polynomial to the power 0");
      return *this;
    }
    MultiPoly acc = constant(arity_, one_like(terms_.begin()->second));
    for (unsigned i = 0; i < k; ++i) acc = acc * *this;
    return acc;
  }

  /// Sum of c_e * prod point_h^{e_h}; `zero` fixes the result's scalar domain.
  template <class T>
  T evaluate(const std::vector<T>& point, const T& zero) const {
    if (point.size() != arity_) throw DomainError("point length does not match arity");
    T acc = zero;
    std::vector<std::vector<T>> powers(arity_);
    for (const auto& [e, c] : terms_) {
      T mono = c * power_of(powers, point, e, zero);
      acc = acc + mono;
    }
    return acc;
  }

 private:
  void check_arity(const MultiPoly& o) const {
    if (arity_ != o.arity_) throw DomainError("polynomials of different arity");
  }
  template <class T>
  static T power_of(std::vector<std::vector<T>>& cache, const std::vector<T>& point, const Exponent& e,
                    const T& zero) {
    T acc = one_like(zero);
    for (std::size_t h = 0; h < e.size(); ++h) {
      if (e[h] == 0) continue;
      auto& pw = cache[h];
      if (pw.empty()) pw.push_back(point[h]);
      while (pw.size() < e[h]) pw.push_back(pw.back() * point[h]);
      acc = acc * pw[e[h] - 1];
    }
    return acc;
  }

  std::size_t arity_;
  Terms terms_;
};

using QPoly = MultiPoly<Rational>;
using KPoly = MultiPoly<NFElement>;

/// d_I P = (1 / i_1! ... i_m!) (d/dx_1)^{i_1} ... (d/dx_m)^{i_m} P, by term-wise binomial shift.
template <class S>
MultiPoly<S> normalized_derivative(const MultiPoly<S>& p, const Exponent& index) {
  if (index.size() != p.arity()) throw DomainError("multi-index length does not match arity");
  MultiPoly<S> r(p.arity());
  for (const auto& [e, c] : p.terms()) {
    Exponent out(e.size());
    Integer coef = 1;
    bool keep = true;
    for (std::size_t h = 0; h < e.size() && keep; ++h) {
      if (e[h] < index[h]) {
        keep = false;
        break;
      }
      out[h] = e[h] - index[h];
      coef *= binomial(e[h], index[h]);
    }
    if (keep) r.add_term(out, Rational(coef) * c);
  }
  return r;
}

/// d_I P evaluated at `point` without forming the derivative.
template <class S, class T>
T derivative_at(const MultiPoly<S>& p, const Exponent& index, const std::vector<T>& point, const T& zero) {
  if (point.size() != p.arity() || index.size() != p.arity()) throw DomainError("length does not match arity");
  T acc = zero;
  std::vector<std::vector<T>> powers(p.arity());
  for (const auto& [e, c] : p.terms()) {
    Integer coef = 1;
    bool keep = true;
    for (std::size_t h = 0; h < e.size(); ++h) {
      if (e[h] < index[h]) {
        keep = false;
        break;
      }
      coef *= binomial(e[h], index[h]);
    }
    if (!keep) continue;
    T mono = (Rational(coef) * c) * one_like(zero);
    for (std::size_t h = 0; h < e.size(); ++h) {
      unsigned k = e[h] - index[h];
      if (k == 0) continue;
      auto& pw = powers[h];
      if (pw.empty()) pw.push_back(point[h]);
      while (pw.size() < k) pw.push_back(pw.back() * point[h]);
      mono = mono * pw[k - 1];
    }
    acc = acc + mono;
  }
  return acc;
}

/// Rational polynomial with all coefficients integral.
bool is_integral(const QPoly& p);

/// Primitive integer form: denominators cleared, content removed, first
/// (lexicographically smallest exponent) coefficient positive.
QPoly primitive_integer_form(const QPoly& p);

/// (x_1, ..., x_m) -> (t, t^d, ..., t^{d^{m-1}}).
QPoly kronecker_substitute(const QPoly& p, unsigned d);

std::string to_string(const QPoly& p);

}  // namespace dioph
