#pragma once

// Successive minima of Z^N with respect to bodies {x : |L_i(x)| <= c_i}.

#include "dioph/linalg.hpp"
#include "dioph/parallel.hpp"

namespace dioph {

inline constexpr std::size_t kMinimaDimensionCap = 5;

struct ConvexBody {
  RatRows forms;    // N x N, invertible
  RatVector bounds; // c_i > 0

  std::size_t dimension() const { return forms.size(); }
};

void validate(const ConvexBody& b);

/// 2^N prod c_i / |det L|.
Rational body_volume(const ConvexBody& b);

/// Least t with x in t B: max |L_i(x)| / c_i.
Rational gauge(const ConvexBody& b, const IntVector& x);

struct MinimaResult {
  RatVector lambdas;
  IntRows witnesses;
  Rational radius;              // every x with gauge <= radius was examined
  std::size_t candidates = 0;   // points with gauge <= radius, up to sign
};

/// Enumerates the ellipsoid |A x|_2^2 <= N T^2 (A = diag(1/c) L) in an
/// LLL-reduced basis, T the largest gauge of that basis, keeps points with
/// gauge <= T, sorts by gauge, then sup norm, support size and descending
/// lex order, and extracts independent witnesses
/// greedily. The parallel path splits the walk over the top coordinate.
MinimaResult successive_minima(const ConvexBody& b, Exec exec = Exec::parallel);

/// Reference: full box |x|_inf <= T ||L^{-1}||_inf max c_i with T the largest
/// gauge of the standard basis.
MinimaResult successive_minima_box(const ConvexBody& b);

struct MinkowskiReport {
  MinimaResult minima;
  Rational volume;
  Rational product;  // lambda_1 ... lambda_N vol
  Rational upper;    // 2^N
  Rational lower;    // 2^N / N!
  bool upper_ok = false;
  bool lower_ok = false;
};

MinkowskiReport minkowski_check(const ConvexBody& b, Exec exec = Exec::parallel);

}  // namespace dioph
