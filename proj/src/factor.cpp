#include "dioph/factor.hpp"

#include "dioph/complex_roots.hpp"
#include "dioph/real_roots.hpp"

#include <algorithm>

namespace dioph {

std::vector<Rational> rational_roots(const IntPoly& f_in) {
  if (f_in.is_zero()) throw DomainError("rational roots of the zero polynomial");
  std::vector<Rational> out;
  if (f_in.degree() < 1) return out;
  IntPoly f = squarefree_part(f_in);
  if (f[0] == 0) {
    out.push_back(0);
    f = *exact_divide(f, IntPoly{Integer(0), Integer(1)});
  }
  // distinct rationals with denominators dividing a_n differ by at least 1/a_n^2
  Integer lead = abs(f.leading());
  Rational width = Rational(1) / Rational(lead * lead * 4);
  for (auto iv : isolate_real_roots(f)) {
    if (iv.exact()) {
      out.push_back(iv.lo);
      continue;
    }
    iv = refine_root(f, iv, width);
    if (iv.exact()) {
      out.push_back(iv.lo);
      continue;
    }
    for (const auto& q : positive_divisors(lead)) {
      Integer p = floor(iv.lo * q + Rational(1, 2));
      for (Integer c = p - 1; c <= p + 1; ++c) {
        Rational r = make_rational(c, q);
        if (iv.lo < r && r < iv.hi && sign_at(f, r) == 0) out.push_back(r);
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// Conjugation-closed subsets as unions of blocks: a real root or a conjugate pair.
struct Block {
  std::vector<std::size_t> members;
};

std::vector<Block> conjugate_blocks(const std::vector<Disk>& roots) {
  std::vector<Block> blocks;
  std::vector<bool> used(roots.size(), false);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    if (roots[i].center.im == 0) {
      blocks.push_back({{i}});
      continue;
    }
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (!used[j] && roots[j].center == roots[i].center.conj()) {
        used[j] = true;
        blocks.push_back({{i, j}});
        break;
      }
    }
  }
  return blocks;
}

bool has_factor_from_roots(const IntPoly& f, const std::vector<Disk>& roots) {
  std::size_t n = roots.size();
  std::vector<Block> blocks = conjugate_blocks(roots);
  std::vector<Integer> leads = positive_divisors(abs(f.leading()));
  std::size_t nb = blocks.size();
  if (nb > 24) throw UnsupportedError("too many conjugate blocks");
  for (unsigned long mask = 1; mask + 1 < (1UL << nb); ++mask) {
    std::vector<Disk> subset;
    for (std::size_t b = 0; b < nb; ++b)
      if (mask & (1UL << b))
        for (auto i : blocks[b].members) subset.push_back(roots[i]);
    if (subset.size() < 2 || 2 * subset.size() > n) continue;
    for (const auto& l : leads) {
      std::optional<IntPoly> g = integer_poly_from_roots(subset, l);
      if (!g) continue;
      if (exact_divide(f, *g)) return true;
    }
  }
  return false;
}

}  // namespace

bool is_irreducible(const IntPoly& f_in) {
  if (f_in.is_zero() || f_in.degree() < 1) throw DomainError("irreducibility needs degree >= 1");
  if (f_in.degree() > kIrreducibilityDegreeCap)
    throw UnsupportedError("irreducibility test is capped at degree 12");
  IntPoly f = normalize_primitive(f_in);
  long n = f.degree();
  if (n == 1) return true;
  if (squarefree_part(f).degree() != n) return false;
  if (!rational_roots(f).empty()) return false;
  if (n <= 3) return true;
  // radius small enough that every reconstruction error stays below 1/4
  Rational b = cauchy_root_bound(f) + 2;
  Rational radius = Rational(1) / (Rational(8 * n) * Rational(abs(f.leading())) * pow(b, n));
  for (int attempt = 0; attempt < 6; ++attempt) {
    try {
      return !has_factor_from_roots(f, root_disks(f, radius));
    } catch (const PrecisionError&) {
      radius /= Rational(1L << 20);
    }
  }
  throw PrecisionError("irreducibility undecided for " + to_string(f));
}

}  // namespace dioph
