#include "dioph/wronskian.hpp"

#include "dioph/linalg.hpp"

#include <bit>
#include <numeric>

namespace dioph {

namespace {

unsigned order(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0u); }

void check_family(const std::vector<QPoly>& phis) {
  if (phis.empty()) throw DomainError("empty family");
  if (phis.size() > kWronskianFamilyCap) throw UnsupportedError("Wronskian families are capped at 6 members");
  for (const auto& p : phis)
    if (p.arity() != phis[0].arity()) throw DomainError("family members of different arity");
}

// Multi-indices of total order exactly k, lexicographic.
std::vector<Exponent> of_order(std::size_t arity, unsigned k) {
  std::vector<Exponent> out;
  Exponent e(arity, 0);
  auto rec = [&](auto&& self, std::size_t pos, unsigned left) -> void {
    if (pos + 1 == arity) {
      e[pos] = left;
      out.push_back(e);
      return;
    }
    for (unsigned v = 0; v <= left; ++v) {
      e[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  if (arity == 0) return out;
  rec(rec, 0, k);
  return out;
}

// Laplace expansion along rows via subset DP.
QPoly determinant(const std::vector<std::vector<QPoly>>& m, std::size_t arity) {
  std::size_t n = m.size();
  std::vector<QPoly> dp(std::size_t{1} << n, QPoly(arity));
  dp[0] = QPoly::constant(arity, Rational(1));
  for (std::size_t mask = 0; mask < dp.size(); ++mask) {
    if (dp[mask].is_zero()) continue;
    std::size_t row = static_cast<std::size_t>(std::popcount(mask));
    if (row == n) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (mask & (std::size_t{1} << j)) continue;
      if (m[row][j].is_zero()) continue;
      int above = std::popcount(mask >> (j + 1));
      QPoly term = dp[mask] * m[row][j];
      std::size_t next = mask | (std::size_t{1} << j);
      dp[next] = above % 2 ? dp[next] - term : dp[next] + term;
    }
  }
  return dp.back();
}

QPoly wronskian_unchecked(const std::vector<QPoly>& phis, const std::vector<Exponent>& mus) {
  std::size_t n = phis.size();
  std::vector<std::vector<QPoly>> m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i].push_back(normalized_derivative(phis[j], mus[i]));
  return determinant(m, phis[0].arity());
}

}  // namespace

QPoly generalized_wronskian(const std::vector<QPoly>& phis, const std::vector<Exponent>& mus) {
  check_family(phis);
  if (mus.size() != phis.size()) throw DomainError("need one multi-index per function");
  for (std::size_t i = 0; i < mus.size(); ++i) {
    if (mus[i].size() != phis[0].arity()) throw DomainError("multi-index length does not match arity");
    if (order(mus[i]) > i) throw DomainError("multi-index order exceeds its position");
  }
  return wronskian_unchecked(phis, mus);
}

std::size_t coefficient_rank(const std::vector<QPoly>& phis) {
  for (const auto& p : phis)
    if (p.arity() != phis[0].arity()) throw DomainError("family members of different arity");
  std::map<Exponent, std::size_t> column;
  for (const auto& p : phis)
    for (const auto& [e, c] : p.terms()) column.emplace(e, 0);
  std::size_t k = 0;
  for (auto& [e, idx] : column) idx = k++;
  RatRows m(phis.size(), RatVector(k, Rational(0)));
  for (std::size_t i = 0; i < phis.size(); ++i)
    for (const auto& [e, c] : phis[i].terms()) m[i][column[e]] = c;
  return k == 0 ? 0 : rank(m);
}

std::vector<std::vector<Exponent>> admissible_tuples(std::size_t n, std::size_t arity, unsigned s) {
  // graded-lex list of candidates per position: orders 0..i
  std::vector<std::vector<Exponent>> choices(n);
  for (std::size_t i = 0; i < n; ++i)
    for (unsigned k = 0; k <= i; ++k)
      for (auto& e : of_order(arity, k)) choices[i].push_back(std::move(e));
  std::vector<std::vector<Exponent>> out;
  std::vector<Exponent> cur;
  auto rec = [&](auto&& self, std::size_t pos, unsigned left) -> void {
    if (pos == n) {
      if (left == 0) out.push_back(cur);
      return;
    }
    unsigned room = 0;
    for (std::size_t q = pos + 1; q < n; ++q) room += static_cast<unsigned>(q);
    for (const auto& e : choices[pos]) {
      unsigned o = order(e);
      if (o > left || left - o > room) continue;
      if (std::find(cur.begin(), cur.end(), e) != cur.end()) continue;
      cur.push_back(e);
      self(self, pos + 1, left - o);
      cur.pop_back();
    }
  };
  rec(rec, 0, s);
  return out;
}

IndependenceResult are_linearly_independent(const std::vector<QPoly>& phis, Exec exec, std::size_t exhaustive_cap) {
  check_family(phis);
  std::size_t n = phis.size(), arity = phis[0].arity();
  IndependenceResult r;
  r.rank = coefficient_rank(phis);
  bool expect = r.rank == n;
  unsigned top = static_cast<unsigned>(n * (n - 1) / 2);

  std::vector<std::vector<std::vector<Exponent>>> levels;
  std::size_t total = 0;
  for (unsigned s = 0; s <= top; ++s) {
    levels.push_back(admissible_tuples(n, arity, s));
    total += levels.back().size();
  }
  bool search = expect || total <= exhaustive_cap;
  if (search) {
    for (const auto& tuples : levels) {
      std::size_t found = tuples.size();
      const long count = static_cast<long>(tuples.size());
      if (exec == Exec::parallel) {
        const long block = 64;
        for (long start = 0; start < count && found == tuples.size(); start += block) {
          long end = std::min(count, start + block);
          long first = end;
#pragma omp parallel for schedule(dynamic, 1) reduction(min : first) num_threads(max_threads())
          for (long t = start; t < end; ++t)
            if (!wronskian_unchecked(phis, tuples[static_cast<std::size_t>(t)]).is_zero()) first = std::min(first, t);
          if (first < end) found = static_cast<std::size_t>(first);
        }
      } else {
        for (std::size_t t = 0; t < tuples.size(); ++t) {
          if (!wronskian_unchecked(phis, tuples[t]).is_zero()) {
            found = t;
            break;
          }
        }
      }
      r.tuples_checked += found < tuples.size() ? found + 1 : tuples.size();
      if (found < tuples.size()) {
        r.independent = true;
        r.witness = tuples[found];
        break;
      }
    }
    r.exhaustive = !r.independent;
  }
  if (!search) r.independent = false;
  if (r.independent != expect) throw InternalError("Wronskian criterion disagrees with the coefficient rank");
  return r;
}

}  // namespace dioph
