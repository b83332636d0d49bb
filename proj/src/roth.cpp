#include "dioph/roth.hpp"

#include <numeric>

namespace dioph {

namespace {

Rational threshold(const IndexSetSpec& spec) {
  return Rational(static_cast<unsigned long>(spec.m)) * (1 - spec.epsilon) / 2;
}

std::vector<unsigned> as_bounds(const std::vector<unsigned long>& r) {
  std::vector<unsigned> b;
  for (auto v : r) b.push_back(static_cast<unsigned>(v));
  return b;
}

// All exponents with e_h <= r_h, lexicographic.
std::vector<Exponent> box_exponents(const std::vector<unsigned long>& r) {
  std::vector<Exponent> out;
  Exponent e(r.size(), 0);
  for (;;) {
    out.push_back(e);
    std::size_t h = r.size();
    while (h > 0 && e[h - 1] == r[h - 1]) e[--h] = 0;
    if (h == 0) break;
    ++e[h - 1];
  }
  return out;
}

Integer max_abs_integer_coeff(const QPoly& p) {
  Integer m = 0;
  for (const auto& [e, c] : p.terms()) {
    if (c.get_den() != 1) throw DomainError("polynomial must have integer coefficients");
    m = std::max(m, abs(c.get_num()));
  }
  return m;
}

void check_degrees(const QPoly& p, const std::vector<unsigned long>& r) {
  validate_weights(r, p.arity());
  auto deg = p.partial_degrees();
  for (std::size_t h = 0; h < r.size(); ++h)
    if (deg[h] > r[h]) throw DomainError("partial degree exceeds r_h");
}

}  // namespace

void validate(const IndexSetSpec& spec) {
  if (spec.m < 1) throw DomainError("m must be at least 1");
  if (spec.epsilon <= 0 || spec.epsilon >= 1) throw DomainError("epsilon must lie in (0, 1)");
  validate_weights(spec.r, spec.m);
}

IndexSetCount count_index_set(const IndexSetSpec& spec) {
  validate(spec);
  Integer l = 1;
  for (auto v : spec.r) mpz_lcm_ui(l.get_mpz_t(), l.get_mpz_t(), v);
  unsigned long lcm = l.get_ui();
  // sum i_h (lcm / r_h) <= floor(threshold * lcm)
  Integer cap_z = floor(threshold(spec) * Rational(l));
  unsigned long cap = cap_z.get_ui();
  std::vector<Integer> ways(cap + 1, Integer(0));
  ways[0] = 1;
  for (auto rh : spec.r) {
    unsigned long w = lcm / rh;
    std::vector<Integer> next(cap + 1, Integer(0));
    for (unsigned long s = 0; s <= cap; ++s) {
      if (ways[s] == 0) continue;
      for (unsigned long i = 0; i <= rh && s + i * w <= cap; ++i) next[s + i * w] += ways[s];
    }
    ways = std::move(next);
  }
  IndexSetCount out;
  out.count = std::accumulate(ways.begin(), ways.end(), Integer(0));
  Integer prod = 1;
  for (auto v : spec.r) prod *= v + 1;
  Rational e = spec.epsilon;
  Rational expo = -(e * e * static_cast<unsigned long>(spec.m)) / 16;
  out.bound = Rational(prod) * exp_enclosure(RealEnclosure::point(expo), Rational(1, 1000000000));
  if (Rational(out.count) > out.bound.hi) throw InternalError("index-set count exceeds its bound");
  return out;
}

std::vector<Exponent> vanishing_indices(const IndexSetSpec& spec) {
  validate(spec);
  Rational t = threshold(spec);
  std::vector<Exponent> out;
  for (auto& idx : indices_by_weight(as_bounds(spec.r), spec.r)) {
    if (weighted_sum(idx, spec.r) >= t) break;
    out.push_back(std::move(idx));
  }
  return out;
}

AuxPolyResult build_aux_poly(const AlgebraicNumber& alpha, const IndexSetSpec& spec) {
  validate(spec);
  if (alpha.min_poly().leading() != 1) throw UnsupportedError("auxiliary polynomial needs an algebraic integer");
  auto base = std::make_shared<const AlgebraicNumber>(alpha);
  std::size_t d = alpha.degree();
  std::vector<Exponent> rows = vanishing_indices(spec);
  std::vector<Exponent> cols = box_exponents(spec.r);
  std::size_t n = cols.size();

  unsigned top = std::accumulate(spec.r.begin(), spec.r.end(), 0u);
  std::vector<NFElement> powers{NFElement(base, Rational(1))};
  NFElement gen = NFElement::generator(base);
  for (unsigned k = 1; k <= top; ++k) powers.push_back(powers.back() * gen);

  NFMatrix system{base, {}};
  for (const auto& idx : rows) {
    std::vector<NFElement> row;
    for (const auto& j : cols) {
      Integer coef = 1;
      unsigned k = 0;
      bool keep = true;
      for (std::size_t h = 0; h < j.size(); ++h) {
        if (j[h] < idx[h]) {
          keep = false;
          break;
        }
        coef *= binomial(j[h], idx[h]);
        k += j[h] - idx[h];
      }
      row.push_back(keep ? Rational(coef) * powers[k] : NFElement(base, Rational(0)));
    }
    system.entries.push_back(std::move(row));
  }

  AuxPolyResult out;
  out.index_target = threshold(spec);
  out.vanishing_conditions = rows.size();
  out.unknowns = n;
  IntRows expanded = expand_nf_rows(system);
  out.expanded_rows = expanded.size();

  IntRows independent;
  std::size_t rk = 0;
  for (const auto& row : expanded) {
    independent.push_back(row);
    std::size_t next = rank(independent);
    if (next == rk)
      independent.pop_back();
    else
      rk = next;
  }
  out.effective_rows = rk;
  if (rk >= n)
    throw InfeasibleError("auxiliary system has a trivial kernel: " + std::to_string(rows.size()) +
                          " vanishing conditions, " + std::to_string(out.expanded_rows) + " rational equations of rank " +
                          std::to_string(rk) + ", " + std::to_string(n) + " unknowns");

  SiegelResult sol;
  if (n > d * rows.size()) {
    out.nf = siegel_solve_NF(system);
    sol = out.nf->expanded;
  } else {
    sol = siegel_solve_Z(independent);
  }
  out.sup = sol.sup;
  out.a_max = sol.a_max;
  out.poly = QPoly(spec.m);
  for (std::size_t c = 0; c < n; ++c) out.poly.add_term(cols[c], Rational(sol.x[c]));

  std::vector<NFElement> point(spec.m, gen);
  NFElement zero(base, Rational(0));
  for (const auto& idx : rows)
    if (!derivative_at(out.poly, idx, point, zero).is_zero())
      throw InternalError("auxiliary polynomial misses a vanishing condition");
  out.index = index_at(out.poly, point, spec.r, zero);
  if (!(IndexValue::finite(out.index_target) <= out.index))
    throw InternalError("auxiliary polynomial index below m(1-eps)/2");

  const Rational width(1, 1000000000);
  out.height = height_polynomial(out.poly);
  out.log_height = log_height(out.height, width);
  out.ratio = Rational(1, static_cast<unsigned long>(top)) * out.log_height;
  if (out.nf) {
    out.ratio_threshold = Rational(1, static_cast<unsigned long>(top)) * out.nf->bound;
  }
  return out;
}

DerivativeHeightCheck derivative_height_bound_check(const QPoly& p, const std::vector<Rational>& beta,
                                                    const Exponent& j, const std::vector<unsigned long>& r) {
  check_degrees(p, r);
  if (beta.size() != p.arity()) throw DomainError("point length does not match arity");
  Integer hp = max_abs_integer_coeff(p);
  Rational value = derivative_at(p, j, beta, Rational(0));
  Rational lhs = *height_rational(value).exact;
  unsigned long total = std::accumulate(r.begin(), r.end(), 0ul);
  Rational rhs = Rational(pow(Integer(4), total) * hp);
  for (std::size_t h = 0; h < beta.size(); ++h) rhs *= pow(*height_rational(beta[h]).exact, static_cast<long>(r[h]));
  return {RealEnclosure::point(lhs), RealEnclosure::point(rhs), lhs <= rhs};
}

DerivativeHeightCheck derivative_height_bound_check(const QPoly& p, const std::vector<NFElement>& beta,
                                                    const Exponent& j, const std::vector<unsigned long>& r) {
  check_degrees(p, r);
  if (beta.size() != p.arity() || beta.empty()) throw DomainError("point length does not match arity");
  for (const auto& b : beta) require_same_field(b.base(), beta[0].base());
  Integer hp = max_abs_integer_coeff(p);
  NFElement value = derivative_at(p, j, beta, NFElement(beta[0].base(), Rational(0)));
  unsigned long total = std::accumulate(r.begin(), r.end(), 0ul);
  Rational width(1, 1000000);
  DerivativeHeightCheck out;
  for (int round = 0; round < 5; ++round, width /= 10000) {
    out.lhs = weil_height(value, width).enclosure;
    out.rhs = RealEnclosure::point(Rational(pow(Integer(4), total) * hp));
    for (std::size_t h = 0; h < beta.size(); ++h) out.rhs = out.rhs * pow(weil_height(beta[h], width).enclosure, r[h]);
    if (out.lhs.hi <= out.rhs.lo) {
      out.holds = true;
      return out;
    }
    if (out.lhs.lo > out.rhs.hi) return out;
  }
  if (out.lhs.is_point() && out.rhs.is_point()) return out;
  throw PrecisionError("derivative height comparison undecided");
}

RothReport roth_lemma_verify(const QPoly& p, const std::vector<Rational>& beta, const std::vector<unsigned long>& r,
                             const Rational& eta) {
  if (p.is_zero()) throw DomainError("Roth's lemma needs a nonzero polynomial");
  check_degrees(p, r);
  if (beta.size() != p.arity()) throw DomainError("point length does not match arity");
  if (eta <= 0 || eta > Rational(1, 2)) throw DomainError("eta must lie in (0, 1/2]");
  std::size_t m = p.arity();
  RothReport out;
  Rational e = pow(eta, static_cast<long>(1ul << (m - 1)));
  out.ratio_hypothesis = true;
  for (std::size_t h = 0; h + 1 < m; ++h)
    if (Rational(r[h + 1]) / Rational(r[h]) > e) out.ratio_hypothesis = false;

  HeightValue hp = height_polynomial(p);
  Rational extra(static_cast<unsigned long>(2 * m * r[0]));
  Rational width(1, 1000000);
  bool decided = false;
  for (int round = 0; round < 6 && !decided; ++round, width /= 10000) {
    RealEnclosure lo_side;
    for (std::size_t h = 0; h < m; ++h) {
      RealEnclosure t = Rational(r[h]) * log_height(height_rational(beta[h]), width);
      lo_side = h == 0 ? t : min(lo_side, t);
    }
    out.height_lhs = e * lo_side;
    out.height_rhs = log_height(hp, width) + RealEnclosure::point(extra);
    if (out.height_lhs.lo >= out.height_rhs.hi) {
      out.height_hypothesis = true;
      decided = true;
    } else if (out.height_lhs.hi < out.height_rhs.lo) {
      decided = true;
    }
  }
  if (!decided) throw PrecisionError("Roth height hypothesis undecided");
  out.hypotheses_hold = out.ratio_hypothesis && out.height_hypothesis;
  out.index = index_at(p, beta, r);
  out.conclusion_bound = Rational(static_cast<unsigned long>(2 * m)) * eta;
  out.conclusion_holds = out.index <= IndexValue::finite(out.conclusion_bound);
  if (out.hypotheses_hold && !out.conclusion_holds) throw InternalError("Roth's lemma conclusion failed");
  return out;
}

}  // namespace dioph
