#include "dioph/lattice.hpp"

#include <algorithm>

namespace dioph {

namespace {

struct Candidate {
  Rational t;
  IntVector x;
};

bool positive_first(const IntVector& x) {
  for (const auto& v : x)
    if (v != 0) return v > 0;
  return false;
}

MinimaResult extract(const ConvexBody& b, std::vector<Candidate> pts, const Rational& radius) {
  auto shape = [](const IntVector& x) {
    Integer sup = 0;
    std::size_t support = 0;
    for (const auto& v : x) {
      sup = std::max(sup, abs(v));
      if (v != 0) ++support;
    }
    return std::pair{sup, support};
  };
  std::sort(pts.begin(), pts.end(), [&](const Candidate& a, const Candidate& c) {
    if (a.t != c.t) return a.t < c.t;
    auto sa = shape(a.x), sc = shape(c.x);
    if (sa != sc) return sa < sc;
    return c.x < a.x;
  });
  MinimaResult r;
  r.radius = radius;
  r.candidates = pts.size();
  std::size_t n = b.dimension();
  RatRows chosen;
  for (const auto& p : pts) {
    if (r.witnesses.size() == n) break;
    chosen.emplace_back(p.x.begin(), p.x.end());
    if (rank(chosen) < chosen.size()) {
      chosen.pop_back();
      continue;
    }
    r.witnesses.push_back(p.x);
    r.lambdas.push_back(p.t);
  }
  if (r.witnesses.size() < n)
    throw InternalError("enumeration radius " + to_string(radius) + " did not reach N independent points");
  return r;
}

Rational inf_norm(const RatRows& m) {
  Rational best = 0;
  for (const auto& row : m) {
    Rational s = 0;
    for (const auto& v : row) s += abs(v);
    best = std::max(best, s);
  }
  return best;
}

}  // namespace

void validate(const ConvexBody& b) {
  std::size_t n = b.forms.size();
  if (n == 0) throw DomainError("empty body");
  for (const auto& row : b.forms)
    if (row.size() != n) throw DomainError("forms must be a square matrix");
  if (b.bounds.size() != n) throw DomainError("need one bound per form");
  for (const auto& c : b.bounds)
    if (c <= 0) throw DomainError("bounds must be positive");
  if (determinant(b.forms) == 0) throw DomainError("singular forms");
}

Rational body_volume(const ConvexBody& b) {
  validate(b);
  Rational v = pow(Rational(2), static_cast<long>(b.dimension()));
  for (const auto& c : b.bounds) v *= c;
  return v / abs(determinant(b.forms));
}

Rational gauge(const ConvexBody& b, const IntVector& x) {
  Rational t = 0;
  for (std::size_t i = 0; i < b.forms.size(); ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < x.size(); ++j) s += b.forms[i][j] * x[j];
    t = std::max(t, Rational(abs(s) / b.bounds[i]));
  }
  return t;
}

MinimaResult successive_minima(const ConvexBody& b, Exec exec) {
  validate(b);
  std::size_t n = b.dimension();
  if (n > kMinimaDimensionCap) throw UnsupportedError("successive minima are capped at N = 5");
  // A = diag(1/c) L scaled to integers; columns are images of e_j
  RatRows a(n, RatVector(n));
  Integer den = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = b.forms[i][j] / b.bounds[i];
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), a[i][j].get_den_mpz_t());
    }
  IntRows cols(n, IntVector(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) cols[j][i] = Rational(a[i][j] * Rational(den)).get_num();
  lll_reduce(cols);
  RatRows scaled(n, RatVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) scaled[i][j] = a[i][j] * Rational(den);
  RatRows inv = inverse(scaled);
  IntRows basis(n, IntVector(n));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      Rational s = 0;
      for (std::size_t j = 0; j < n; ++j) s += inv[i][j] * cols[k][j];
      if (s.get_den() != 1) throw InternalError("reduced basis left the integer lattice");
      basis[k][i] = s.get_num();
    }
  Rational t_max = 0;
  for (const auto& u : basis) t_max = std::max(t_max, gauge(b, u));

  Rational d2 = Rational(den * den);
  RatRows gram(n, RatVector(n));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) {
      Integer s = 0;
      for (std::size_t i = 0; i < n; ++i) s += cols[k][i] * cols[l][i];
      gram[k][l] = Rational(s) / d2;
    }
  EllipsoidEnumerator walker(gram);
  const Rational limit = Rational(static_cast<unsigned long>(n)) * t_max * t_max;
  auto collect = [&](std::vector<Candidate>& out) {
    return [&](const IntVector& y, Rational&) {
      IntVector x(n, Integer(0));
      for (std::size_t k = 0; k < n; ++k)
        if (y[k] != 0)
          for (std::size_t i = 0; i < n; ++i) x[i] += y[k] * basis[k][i];
      if (!positive_first(x)) return;
      Rational t = gauge(b, x);
      if (t <= t_max) out.push_back({t, std::move(x)});
    };
  };

  std::vector<Candidate> pts;
  if (exec == Exec::parallel) {
    auto [lo, hi] = walker.top_range(limit);
    long first = lo.get_si(), last = hi.get_si();
    std::vector<std::vector<Candidate>> parts(static_cast<std::size_t>(last - first + 1));
#pragma omp parallel for schedule(dynamic, 1) num_threads(max_threads())
    for (long t = first; t <= last; ++t) {
      Rational bound = limit;
      auto& part = parts[static_cast<std::size_t>(t - first)];
      walker.enumerate_top(Integer(t), bound, collect(part));
    }
    for (auto& part : parts)
      for (auto& c : part) pts.push_back(std::move(c));
  } else {
    Rational bound = limit;
    walker.enumerate(bound, collect(pts));
  }
  return extract(b, std::move(pts), t_max);
}

MinimaResult successive_minima_box(const ConvexBody& b) {
  validate(b);
  std::size_t n = b.dimension();
  if (n > kMinimaDimensionCap) throw UnsupportedError("successive minima are capped at N = 5");
  Rational t_max = 0;
  for (std::size_t j = 0; j < n; ++j) {
    IntVector e(n, Integer(0));
    e[j] = 1;
    t_max = std::max(t_max, gauge(b, e));
  }
  Rational cmax = *std::max_element(b.bounds.begin(), b.bounds.end());
  Integer r = floor(t_max * inf_norm(inverse(b.forms)) * cmax);
  Rational points = pow(Rational(2 * r + 1), static_cast<long>(n));
  if (points > 2000000) throw UnsupportedError("reference box too large");
  long rr = r.get_si();
  std::vector<Candidate> pts;
  IntVector x(n, Integer(-rr));
  for (;;) {
    if (positive_first(x)) {
      Rational t = gauge(b, x);
      if (t <= t_max) pts.push_back({t, x});
    }
    std::size_t i = 0;
    while (i < n && x[i] == rr) x[i++] = -rr;
    if (i == n) break;
    ++x[i];
  }
  return extract(b, std::move(pts), t_max);
}

MinkowskiReport minkowski_check(const ConvexBody& b, Exec exec) {
  MinkowskiReport r;
  r.minima = successive_minima(b, exec);
  r.volume = body_volume(b);
  r.product = r.volume;
  for (const auto& l : r.minima.lambdas) r.product *= l;
  long n = static_cast<long>(b.dimension());
  r.upper = pow(Rational(2), n);
  r.lower = r.upper / Rational(factorial(static_cast<unsigned long>(n)));
  r.upper_ok = r.product <= r.upper;
  r.lower_ok = r.product >= r.lower;
  return r;
}

}  // namespace dioph
