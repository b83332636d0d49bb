#pragma once

#include "dioph/multipoly.hpp"

namespace dioph {

/// Ind_{point, r}(P): exact rational, or infinite for P = 0.
struct IndexValue {
  bool infinite = false;
  Rational value;

  static IndexValue inf() { return {true, 0}; }
  static IndexValue finite(const Rational& q) { return {false, q}; }
  friend bool operator==(const IndexValue& a, const IndexValue& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
  /// a <= b with inf as the top element.
  friend bool operator<=(const IndexValue& a, const IndexValue& b) {
    if (b.infinite) return true;
    if (a.infinite) return false;
    return a.value <= b.value;
  }
  friend IndexValue operator+(const IndexValue& a, const IndexValue& b) {
    if (a.infinite || b.infinite) return inf();
    return finite(a.value + b.value);
  }
};

std::string to_string(const IndexValue& v);  // "inf" or "num/den"

/// Sum of i_h / r_h.
Rational weighted_sum(const Exponent& index, const std::vector<unsigned long>& weights);

/// All multi-indices 0 <= i_h <= bound_h, sorted by weighted sum, ties lexicographic.
std::vector<Exponent> indices_by_weight(const std::vector<unsigned>& bounds, const std::vector<unsigned long>& weights);

void validate_weights(const std::vector<unsigned long>& weights, std::size_t arity);

/// Minimum of sum i_h / r_h over I with d_I P(point) != 0; walks I in
/// increasing weighted order and stops at the first nonvanishing derivative.
template <class S, class T>
IndexValue index_at(const MultiPoly<S>& p, const std::vector<T>& point, const std::vector<unsigned long>& weights,
                    const T& zero) {
  validate_weights(weights, p.arity());
  if (point.size() != p.arity()) throw DomainError("point length does not match arity");
  if (p.is_zero()) return IndexValue::inf();
  for (const auto& idx : indices_by_weight(p.partial_degrees(), weights))
    if (!scalar_is_zero(derivative_at(p, idx, point, zero))) return IndexValue::finite(weighted_sum(idx, weights));
  throw InternalError("nonzero polynomial with all derivatives vanishing");
}

inline IndexValue index_at(const QPoly& p, const std::vector<Rational>& point,
                           const std::vector<unsigned long>& weights) {
  return index_at(p, point, weights, Rational(0));
}

}  // namespace dioph
