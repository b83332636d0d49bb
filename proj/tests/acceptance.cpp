// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
// Usage: dioph_acceptance [criterion numbers...]

#define SUPPORT_WITHOUT_DOCTEST
#include "support.hpp"

#include "dioph/io.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>

using namespace dioph;
using namespace testing_support;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Records the first few failed checks.
class Checker {
 public:
  void check(bool cond, const std::string& what) {
    ++checks_;
    if (cond) return;
    ++failures_;
    if (failures_ <= 3) notes_ << (failures_ > 1 ? "; " : "") << what;
  }
  Outcome outcome(const std::string& summary) const {
    std::ostringstream s;
    s << summary << " [" << checks_ << " checks";
    if (failures_) s << ", " << failures_ << " failed: " << notes_.str();
    s << "]";
    return {failures_ == 0, s.str()};
  }

 private:
  std::size_t checks_ = 0, failures_ = 0;
  std::ostringstream notes_;
};

std::string dec(const Rational& q, int digits = 12) {
  std::ostringstream s;
  s.precision(digits);
  s << q.get_d();
  return s.str();
}

AlgebraicNumber largest_real_root(const IntPoly& f) {
  std::size_t n = isolate_real_roots(f).size();
  return AlgebraicNumber::real_root(f, n - 1);
}

// lo^n <= c <= hi^n, exactly
bool encloses_nth_root(const RealEnclosure& e, unsigned long n, const Rational& c) {
  Rational lo = e.lo, hi = e.hi;
  return (lo <= 0 || pow(lo, n) <= c) && pow(hi, n) >= c;
}

Outcome mahler_height_identity() {
  Checker c;
  const Rational w(1, 1000000000);
  for (unsigned long n = 2; n <= 10; ++n) {
    IntPoly f = parse_int_poly("x^" + std::to_string(n) + "-2");
    HeightValue h = weil_height_algebraic(largest_real_root(f), w);
    c.check(encloses_nth_root(h.enclosure, n, 2), "n=" + std::to_string(n) + " misses 2^(1/n)");
    c.check(h.enclosure.width() <= w, "n=" + std::to_string(n) + " too wide");
  }
  return c.outcome("H(2^(1/n)) enclosed for n=2..10");
}

Outcome kronecker() {
  Checker c;
  const Rational w(1, 10000000000L);
  std::size_t polys = 0;
  for (unsigned long k = 1; k <= 64; ++k) {
    if (euler_phi(k) > 8) continue;
    ++polys;
    IntPoly f = cyclotomic(k);
    AlgebraicNumber a = AlgebraicNumber::conjugate(f, 0);
    HeightValue h = weil_height_algebraic(a, w);
    std::string tag = "Phi_" + std::to_string(k);
    c.check(h.enclosure.contains(Rational(1)), tag + " height excludes 1");
    c.check(h.enclosure.width() < w, tag + " too wide");
    c.check(is_root_of_unity(a) == std::optional<unsigned long>(k), tag + " wrong order");
  }
  AlgebraicNumber phi = largest_real_root(parse_int_poly("x^2-x-1"));
  HeightValue hp = weil_height_algebraic(phi, w);
  c.check(!hp.enclosure.contains(Rational(1)), "golden ratio height contains 1");
  c.check(!is_root_of_unity(phi).has_value(), "golden ratio flagged as root of unity");
  return c.outcome(std::to_string(polys) + " cyclotomic polynomials; H(phi) ~ " + dec(hp.enclosure.lo, 9));
}

Outcome siegel_suite() {
  Checker c;
  Rng rng(1001);
  std::size_t oracle_checked = 0;
  for (int i = 0; i < 500; ++i) {
    std::size_t m = static_cast<std::size_t>(rng.uniform(1, 3));
    std::size_t n = static_cast<std::size_t>(rng.uniform(static_cast<long>(m) + 1, 8));
    IntRows a = random_matrix(rng, m, n, 10);
    while (std::all_of(a.begin(), a.end(), [](const IntVector& row) {
      return std::all_of(row.begin(), row.end(), [](const Integer& v) { return v == 0; });
    }))
      a = random_matrix(rng, m, n, 10);
    SiegelResult s = siegel_solve_Z(a);
    std::string tag = "system " + std::to_string(i);
    bool nonzero = std::any_of(s.x.begin(), s.x.end(), [](const Integer& v) { return v != 0; });
    c.check(s.x.size() == n && nonzero, tag + " trivial solution");
    c.check(in_kernel(a, s.x), tag + " not in kernel");
    c.check(siegel_bound_holds(s.x, m, n, s.a_max), tag + " exceeds the Siegel bound");
    Integer a_max = 0;
    for (const auto& row : a)
      for (const auto& v : row) a_max = std::max(a_max, Integer(abs(v)));
    Integer sup = 0;
    for (const auto& v : s.x) sup = std::max(sup, Integer(abs(v)));
    Integer lhs, rhs;
    mpz_pow_ui(lhs.get_mpz_t(), sup.get_mpz_t(), n - m);
    Integer base = a_max * static_cast<unsigned long>(n);
    mpz_pow_ui(rhs.get_mpz_t(), base.get_mpz_t(), m);
    c.check(lhs < rhs, tag + " exceeds (N A)^M");
    long h = sup.get_si();
    if (oracle_box_cost(n, h) > 4e6) continue;
    c.check(oracle_kernel_point_exists(a, n, h), tag + " oracle finds no point in the box");
    ++oracle_checked;
  }
  return c.outcome("500 systems; box searched by the oracle for " + std::to_string(oracle_checked) +
                   ", the rest witnessed by the returned kernel vector only");
}

std::vector<Rational> random_point(Rng& rng, std::size_t arity) {
  std::vector<Rational> pt(arity);
  for (auto& v : pt) {
    long k = rng.uniform(0, 2);
    v = k == 0 ? Rational(0) : k == 1 ? Rational(1) : rng.rational(3, 3);
    v.canonicalize();
  }
  return pt;
}

QPoly random_vanishing(Rng& rng, const std::vector<Rational>& pt) {
  std::size_t m = pt.size();
  QPoly p = random_qpoly(rng, m, 3, 5, 4);
  for (std::size_t h = 0; h < m; ++h)
    if (rng.coin()) p = p * linear_factor(m, h, pt[h]);
  return p;
}

Outcome index_algebra() {
  Checker c;
  Rng rng(1004);
  for (int i = 0; i < 300; ++i) {
    std::size_t m = static_cast<std::size_t>(rng.uniform(1, 3));
    auto pt = random_point(rng, m);
    QPoly p = random_vanishing(rng, pt), q = random_vanishing(rng, pt);
    std::vector<unsigned long> r(m);
    for (auto& v : r) v = static_cast<unsigned long>(rng.uniform(1, 4));
    IndexValue lhs = index_at(p * q, pt, r), rhs = index_at(p, pt, r) + index_at(q, pt, r);
    c.check(lhs == rhs, "pair " + std::to_string(i) + ": " + to_string(lhs) + " != " + to_string(rhs));
  }
  IndexValue e = index_at(parse_multi_poly("(x1-1)^2*(x2-2)^3"), {Rational(1), Rational(2)}, {2, 3});
  c.check(e == IndexValue::finite(2), "example index " + to_string(e));
  return c.outcome("300 pairs; example index " + to_string(e));
}

std::vector<QPoly> random_family(Rng& rng, bool force_dependent) {
  std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
  std::size_t m = static_cast<std::size_t>(rng.uniform(1, 3));
  std::vector<QPoly> fam;
  for (std::size_t i = 0; i < n; ++i) {
    QPoly f = random_qpoly(rng, m, 3, 4, 3);
    if (f.is_zero()) f = QPoly::constant(m, Rational(1));
    fam.push_back(f);
  }
  if (force_dependent && n >= 2) {
    std::size_t k = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
    QPoly comb(m);
    for (std::size_t i = 0; i < n; ++i)
      if (i != k) comb = comb + Rational(rng.uniform(-3, 3)) * fam[i];
    fam[k] = comb.is_zero() ? fam[(k + 1) % n] : comb;
  }
  return fam;
}

Outcome wronskian_rank() {
  Checker c;
  Rng rng(1005);
  std::size_t independent = 0;
  for (int i = 0; i < 300; ++i) {
    auto fam = random_family(rng, rng.coin());
    auto r = are_linearly_independent(fam);
    bool expect = family_rank(fam) == fam.size();
    c.check(r.independent == expect, "family " + std::to_string(i) + " mismatch");
    if (r.independent) c.check(!generalized_wronskian(fam, r.witness).is_zero(), "vanishing witness");
    independent += r.independent;
  }
  return c.outcome("300 families, " + std::to_string(independent) + " independent");
}

// Nondecreasing tuples cover the grid since the count is symmetric in r.
void for_each_sorted_tuple(unsigned m, unsigned long lo, std::vector<unsigned long>& r,
                           const std::function<void(const std::vector<unsigned long>&)>& f) {
  if (r.size() == m) {
    f(r);
    return;
  }
  for (unsigned long v = lo; v <= 5; ++v) {
    r.push_back(v);
    for_each_sorted_tuple(m, v, r, f);
    r.pop_back();
  }
}

Outcome index_set_grid() {
  Checker c;
  std::size_t cases = 0;
  for (unsigned m = 1; m <= 12; ++m)
    for (const Rational& eps : {Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
      std::vector<unsigned long> r;
      for_each_sorted_tuple(m, 1, r, [&](const std::vector<unsigned long>& t) {
        ++cases;
        IndexSetCount k = count_index_set({m, eps, t});
        c.check(Rational(k.count) <= k.bound.lo, "m=" + std::to_string(m) + " eps=" + to_string(eps));
      });
    }
  IndexSetCount ex = count_index_set({2, Rational(1, 2), {2, 2}});
  c.check(ex.count == 3, "example count " + to_string(ex.count));
  c.check(ex.bound.approx() > 8.72 && ex.bound.approx() < 8.74, "example bound " + dec(ex.bound.lo, 6));
  return c.outcome(std::to_string(cases) + " grid points; example count " + to_string(ex.count) + " <= " +
                   dec(ex.bound.lo, 5));
}

NFElement eval_at_diagonal(const QPoly& p, const Exponent& idx, const NFElement::Base& base) {
  QPoly d = normalized_derivative(p, idx);
  NFElement a = NFElement::generator(base);
  NFElement acc(base, Rational(0));
  for (const auto& [e, coef] : d.terms()) {
    unsigned total = 0;
    for (auto v : e) total += v;
    acc = acc + coef * a.pow(total);
  }
  return acc;
}

Outcome aux_poly() {
  Checker c;
  IndexSetSpec spec{2, Rational(1, 2), {3, 3}};
  AlgebraicNumber s = largest_real_root(parse_int_poly("x^2-2"));
  auto base = std::make_shared<const AlgebraicNumber>(s);
  NFElement a = NFElement::generator(base), zero(base, Rational(0));
  AuxPolyResult r = build_aux_poly(s, spec);
  auto conds = vanishing_indices(spec);
  c.check(!r.poly.is_zero(), "zero polynomial");
  c.check(conds.size() == 3, "expected 3 vanishing conditions");
  for (const auto& idx : conds) c.check(eval_at_diagonal(r.poly, idx, base).is_zero(), "derivative nonzero");
  IndexValue v = index_at(r.poly, std::vector<NFElement>{a, a}, spec.r, zero);
  c.check(!v.infinite && v.value >= Rational(1, 2), "index " + to_string(v));
  QPoly w = parse_multi_poly("(x1-x2)^2");
  for (const auto& idx : conds) c.check(eval_at_diagonal(w, idx, base).is_zero(), "witness derivative nonzero");
  IndexValue vw = index_at(w, std::vector<NFElement>{a, a}, spec.r, zero);
  c.check(!vw.infinite && vw.value >= Rational(1, 2), "witness index " + to_string(vw));
  return c.outcome("P = " + to_string(r.poly) + ", index " + to_string(v) + "; witness index " + to_string(vw));
}

Outcome roth_verifier() {
  Checker c;
  Rng rng(1008);
  for (int i = 0; i < 50; ++i) {
    RothInstance in = roth_instance(rng, i % 2 == 0 ? 1 : 2);
    RothReport r = roth_lemma_verify(in.p, in.beta, in.r, in.eta);
    std::string tag = "instance " + std::to_string(i);
    c.check(r.hypotheses_hold, tag + " hypotheses fail");
    Rational bound = 2 * Rational(static_cast<unsigned long>(in.beta.size())) * in.eta;
    c.check(!r.index.infinite && r.index.value <= bound, tag + " index " + to_string(r.index));
    c.check(r.conclusion_holds, tag + " conclusion fails");
    c.check(r.index == oracle_index(in.p, in.beta, in.r), tag + " disagrees with the oracle");
  }
  return c.outcome("50 instances (m = 1, 2)");
}

Outcome liouville() {
  Checker c;
  RealEnclosure k = liouville_constant(largest_real_root(parse_int_poly("x^2-2")), Rational(1, 10000000000L));
  // 1/(3 sqrt 2) = sqrt(2)/6
  Rational lo6 = 6 * k.lo, hi6 = 6 * k.hi;
  c.check(lo6 * lo6 <= 2 && hi6 * hi6 >= 2, "c(sqrt 2) misses 1/(3 sqrt 2)");
  c.check(k.width() <= Rational(1, 1000000000), "c(sqrt 2) too wide");
  std::size_t checked = 0;
  for (const char* poly : {"x^2-2", "x^2-x-1"}) {
    LiouvilleScan s = liouville_scan(largest_real_root(parse_int_poly(poly)), Integer(100000), 1000);
    c.check(s.violations.empty(), std::string(poly) + ": " + std::to_string(s.violations.size()) + " violations");
    checked += s.checked;
  }
  return c.outcome("c(sqrt 2) in [" + dec(k.lo, 12) + ", " + dec(k.hi, 12) + "], " + std::to_string(checked) +
                   " approximations checked");
}

Outcome hurwitz() {
  Checker c;
  AlgebraicNumber phi = largest_real_root(parse_int_poly("x^2-x-1"));
  // F_10 = 55, F_30 = 832040
  ExponentReport rep = exponent_report(phi, Integer(832040), Exec::parallel, Integer(55));
  c.check(rep.dirichlet_count == rep.records.size(), "a convergent violates 1/q^2");
  c.check(rep.records.size() == 21, "expected 21 Fibonacci convergents, got " + std::to_string(rep.records.size()));
  Rational plain_lo = rep.records.front().scaled_error.lo, plain_hi = rep.records.front().scaled_error.hi;
  for (const auto& r : rep.records)
    if (r.scaled_error.hi < plain_hi) {
      plain_lo = r.scaled_error.lo;
      plain_hi = r.scaled_error.hi;
    }
  const RealEnclosure& tail = rep.hurwitz_liminf;
  c.check(tail.lo >= Rational(4472, 10000) && tail.hi <= Rational(46, 100), "tail minimum " + dec(tail.lo, 7));
  return c.outcome("tail minimum (later half) " + dec(tail.lo, 7) + ", minimum over all F10..F30 " +
                   dec(plain_lo, 7));
}

Outcome roth_trend() {
  Checker c;
  ExponentReport rep = exponent_report(largest_real_root(parse_int_poly("x^2-2")), Integer(10000));
  std::optional<RealEnclosure> early, late;
  auto widen = [](std::optional<RealEnclosure>& acc, const RealEnclosure& e) {
    if (!acc || e.lo > acc->lo) acc = e;
  };
  for (const auto& r : rep.records) {
    if (!r.exponent) continue;
    if (r.q >= 2 && r.q <= 100) widen(early, *r.exponent);
    if (r.q >= 1000 && r.q <= 10000) widen(late, *r.exponent);
  }
  c.check(early && late, "empty q range");
  if (!early || !late) return c.outcome("");
  c.check(late->hi < early->lo, "late maximum not below early maximum");
  c.check(late->lo > 2 && early->lo > 2, "maximum exponent not above 2");
  return c.outcome("max kappa on [2,100] = " + dec(early->lo, 6) + ", on [1e3,1e4] = " + dec(late->lo, 6));
}

ConvexBody identity_box(std::size_t n) {
  ConvexBody b;
  b.forms.assign(n, RatVector(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) b.forms[i][i] = 1;
  b.bounds.assign(n, Rational(1));
  return b;
}

Outcome minkowski() {
  Checker c;
  Rng rng(1012);
  for (int i = 0; i < 200; ++i) {
    ConvexBody b = random_body(rng, static_cast<std::size_t>(rng.uniform(1, 4)), 5, 9, 4);
    MinkowskiReport r = minkowski_check(b);
    std::string tag = "body " + std::to_string(i);
    c.check(r.lower <= r.product && r.product <= r.upper, tag + " product " + to_string(r.product));
    c.check(r.lower_ok && r.upper_ok, tag + " flags");
  }
  for (std::size_t n = 1; n <= 4; ++n) {
    MinkowskiReport r = minkowski_check(identity_box(n));
    c.check(r.product == r.upper, "identity box N=" + std::to_string(n) + " gives " + to_string(r.product));
  }
  return c.outcome("200 random bodies, identity boxes N=1..4");
}

Outcome product_formula() {
  Checker c;
  Rng rng(1013);
  for (int i = 0; i < 1000; ++i) {
    Rational x = rng.nonzero_rational(1000000, 1000000);
    std::vector<Place> S = support_places(x);
    RealEnclosure s = sum_log_abs_over_S(x, S);
    c.check(s.is_point() && s.lo == 0, "sum of logs for " + to_string(x));
    c.check(product_abs_over_S(x, S) == 1, "product for " + to_string(x));
  }
  return c.outcome("1000 rationals");
}

struct Criterion {
  int id;
  const char* name;
  double limit;
  Outcome (*run)();
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all{
      {1, "Mahler/height identity", 5, mahler_height_identity},
      {2, "Kronecker", 10, kronecker},
      {3, "Siegel bound suite", 60, siegel_suite},
      {4, "index algebra", 30, index_algebra},
      {5, "Wronskian/rank equivalence", 60, wronskian_rank},
      {6, "index-set count grid", 30, index_set_grid},
      {7, "auxiliary polynomial", 10, aux_poly},
      {8, "Roth's lemma verifier", 30, roth_verifier},
      {9, "Liouville scan", 60, liouville},
      {10, "Hurwitz/Dirichlet", 10, hurwitz},
      {11, "Roth-exponent trend", 10, roth_trend},
      {12, "Minkowski suite", 120, minkowski},
      {13, "product formula", 5, product_formula},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  int failed = 0;
  for (const auto& cr : all) {
    if (!only.empty() && !only.count(cr.id)) continue;
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = cr.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = secs < cr.limit;
    bool ok = o.ok && in_time;
    failed += !ok;
    std::printf("%s %2d %-28s %7.2f s (limit %3.0f s)%s  %s\n", ok ? "PASS" : "FAIL", cr.id, cr.name, secs, cr.limit,
                in_time ? "" : " TIMEOUT", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d failed\n", failed);
  return failed == 0 ? 0 : 1;
}
