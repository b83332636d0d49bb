#include "dioph/linalg.hpp"

#include "dioph/enclosure.hpp"

#include <utility>

namespace dioph {

Integer bareiss_determinant(IntRows m) {
  std::size_t n = m.size();
  if (n == 0) return 1;
  Integer prev = 1;
  int sgn_flip = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sgn_flip = -sgn_flip;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sgn_flip * m[n - 1][n - 1];
}

Rational determinant(RatRows m) {
  std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[k], m[p]);
      det = -det;
    }
    det *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      Rational f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det;
}

Echelon reduced_row_echelon(RatRows m) {
  Echelon out;
  if (m.empty()) return out;
  std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    Rational inv = 1 / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    out.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

std::size_t rank(const RatRows& m) { return reduced_row_echelon(m).pivots.size(); }
std::size_t rank(const IntRows& m) { return rank(to_rational(m)); }

RatRows to_rational(const IntRows& m) {
  RatRows out;
  out.reserve(m.size());
  for (const auto& row : m) out.emplace_back(row.begin(), row.end());
  return out;
}

RatRows rational_kernel(const RatRows& m, std::size_t cols) {
  Echelon e = reduced_row_echelon(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  RatRows basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVector v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.rows[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

RatRows inverse(const RatRows& m) {
  std::size_t n = m.size();
  RatRows aug(n, RatVector(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  Echelon e = reduced_row_echelon(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw DomainError("singular matrix");
  RatRows inv(n, RatVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = e.rows[i][n + j];
  return inv;
}

IntRows integer_kernel_basis(const IntRows& m, std::size_t cols) {
  std::size_t rows = m.size();
  IntRows b = m;  // rows x cols, column operations applied
  IntRows u(cols, IntVector(cols, 0));
  for (std::size_t i = 0; i < cols; ++i) u[i][i] = 1;

  auto combine = [&](std::size_t c, std::size_t k, const Integer& s, const Integer& t, const Integer& p,
                     const Integer& q) {
    // col_c <- s col_c + t col_k ; col_k <- p col_c + q col_k
    for (auto* mat : {&b, &u}) {
      for (auto& row : *mat) {
        Integer vc = row[c], vk = row[k];
        row[c] = s * vc + t * vk;
        row[k] = p * vc + q * vk;
      }
    }
  };

  std::size_t c = 0;
  for (std::size_t i = 0; i < rows && c < cols; ++i) {
    for (std::size_t k = c + 1; k < cols; ++k) {
      if (b[i][k] == 0) continue;
      Integer a = b[i][c], bk = b[i][k], g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), bk.get_mpz_t());
      combine(c, k, s, t, Integer(-bk / g), Integer(a / g));
    }
    if (b[i][c] != 0) ++c;
  }
  IntRows basis;
  for (std::size_t k = c; k < cols; ++k) {
    IntVector v(cols);
    for (std::size_t r = 0; r < cols; ++r) v[r] = u[r][k];
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

Rational dot(const RatVector& a, const RatVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer round_nearest(const Rational& q) { return floor(q + Rational(1, 2)); }

struct GramSchmidt {
  RatRows mu;
  RatVector norms;  // |b*_i|^2
};

GramSchmidt gram_schmidt(const IntRows& b) {
  std::size_t n = b.size();
  RatRows star(n);
  GramSchmidt gs{RatRows(n, RatVector(n, Rational(0))), RatVector(n)};
  for (std::size_t i = 0; i < n; ++i) {
    star[i] = RatVector(b[i].begin(), b[i].end());
    RatVector bi = star[i];
    for (std::size_t j = 0; j < i; ++j) {
      gs.mu[i][j] = dot(bi, star[j]) / gs.norms[j];
      for (std::size_t t = 0; t < bi.size(); ++t) star[i][t] -= gs.mu[i][j] * star[j][t];
    }
    gs.norms[i] = dot(star[i], star[i]);
  }
  return gs;
}

}  // namespace

void lll_reduce(IntRows& b) {
  std::size_t n = b.size();
  if (n < 2) return;
  const Rational delta(3, 4);
  GramSchmidt gs = gram_schmidt(b);
  auto& mu = gs.mu;
  auto& bn = gs.norms;
  auto size_reduce = [&](std::size_t k, std::size_t j) {
    Integer q = round_nearest(mu[k][j]);
    if (q == 0) return;
    for (std::size_t t = 0; t < b[k].size(); ++t) b[k][t] -= q * b[j][t];
    for (std::size_t l = 0; l < j; ++l) mu[k][l] -= q * mu[j][l];
    mu[k][j] -= q;
  };
  std::size_t k = 1;
  while (k < n) {
    size_reduce(k, k - 1);
    Rational m = mu[k][k - 1];
    if (bn[k] < (delta - m * m) * bn[k - 1]) {
      // swap b_{k-1}, b_k and update the orthogonalization in place
      std::swap(b[k], b[k - 1]);
      Rational big = bn[k] + m * m * bn[k - 1];
      Rational nm = m * bn[k - 1] / big;
      Rational nk = bn[k - 1] * bn[k] / big;
      for (std::size_t j = 0; j + 1 < k; ++j) std::swap(mu[k][j], mu[k - 1][j]);
      for (std::size_t i = k + 1; i < n; ++i) {
        Rational t = mu[i][k];
        mu[i][k] = mu[i][k - 1] - m * t;
        mu[i][k - 1] = t + nm * mu[i][k];
      }
      mu[k][k - 1] = nm;
      bn[k - 1] = big;
      bn[k] = nk;
      k = k > 1 ? k - 1 : 1;
    } else {
      for (std::size_t j = k - 1; j-- > 0;) size_reduce(k, j);
      ++k;
    }
  }
}

}  // namespace dioph

namespace dioph {

EllipsoidEnumerator::EllipsoidEnumerator(const RatRows& g) {
  std::size_t k = g.size();
  d_.assign(k, Rational(0));
  u_.assign(k, RatVector(k, Rational(0)));
  for (std::size_t i = 0; i < k; ++i) {
    u_[i][i] = 1;
    Rational di = g[i][i];
    for (std::size_t j = 0; j < i; ++j) di -= u_[j][i] * u_[j][i] * d_[j];
    if (di <= 0) throw DomainError("Gram matrix is not positive definite");
    d_[i] = di;
    for (std::size_t l = i + 1; l < k; ++l) {
      Rational s = g[i][l];
      for (std::size_t j = 0; j < i; ++j) s -= u_[j][i] * u_[j][l] * d_[j];
      u_[i][l] = s / di;
    }
  }
}

namespace {

// Integers y with d (y - c)^2 <= room.
std::pair<Integer, Integer> level_range(const Rational& c, const Rational& d, const Rational& room) {
  if (room < 0) return {1, 0};
  Rational s = sqrt_upper(room / d, 64);
  return {ceil(c - s), floor(c + s)};
}

}  // namespace

std::pair<Integer, Integer> EllipsoidEnumerator::top_range(const Rational& bound) const {
  if (d_.empty()) return {1, 0};
  return level_range(0, d_.back(), bound);
}

bool EllipsoidEnumerator::walk(std::size_t level, IntVector& y, const Rational& acc, Rational& bound,
                               const Visitor& visit, std::size_t& nodes) const {
  // y[level+1..] fixed; Q(y) = sum_i d_i (y_i + sum_{l>i} u_il y_l)^2
  Rational c = 0;
  for (std::size_t l = level + 1; l < y.size(); ++l) c -= u_[level][l] * y[l];
  auto [lo, hi] = level_range(c, d_[level], bound - acc);
  for (Integer v = lo; v <= hi; ++v) {
    if (nodes == 0) {
      y[level] = 0;
      return false;
    }
    --nodes;
    Rational diff = Rational(v) - c;
    Rational next = acc + d_[level] * diff * diff;
    if (next > bound) continue;
    y[level] = v;
    if (level == 0) {
      bool zero = true;
      for (const auto& t : y)
        if (t != 0) zero = false;
      if (!zero) visit(y, bound);
    } else if (!walk(level - 1, y, next, bound, visit, nodes)) {
      y[level] = 0;
      return false;
    }
  }
  y[level] = 0;
  return true;
}

bool EllipsoidEnumerator::enumerate_top(const Integer& top, Rational& bound, const Visitor& visit,
                                        std::size_t node_limit) const {
  std::size_t k = d_.size();
  if (k == 0) return true;
  IntVector y(k, Integer(0));
  Rational first = d_[k - 1] * Rational(top) * Rational(top);
  if (first > bound) return true;
  y[k - 1] = top;
  if (k == 1) {
    if (top != 0) visit(y, bound);
    return true;
  }
  return walk(k - 2, y, first, bound, visit, node_limit);
}

bool EllipsoidEnumerator::enumerate(Rational& bound, const Visitor& visit, std::size_t node_limit) const {
  if (d_.empty()) return true;
  auto [lo, hi] = top_range(bound);
  std::size_t k = d_.size();
  IntVector y(k, Integer(0));
  for (Integer t = lo; t <= hi; ++t) {
    Rational first = d_[k - 1] * Rational(t) * Rational(t);
    if (first > bound) continue;
    if (node_limit == 0) return false;
    --node_limit;
    y[k - 1] = t;
    if (k == 1) {
      if (t != 0) visit(y, bound);
      continue;
    }
    if (!walk(k - 2, y, first, bound, visit, node_limit)) return false;
  }
  return true;
}

}  // namespace dioph
