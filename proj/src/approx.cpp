#include "dioph/approx.hpp"

#include "dioph/complex_roots.hpp"

namespace dioph {

namespace {

void require_real(const AlgebraicNumber& alpha) {
  if (!alpha.is_real()) throw DomainError("continued fractions need a real number");
}

void require_irrational(const AlgebraicNumber& alpha) {
  require_real(alpha);
  if (alpha.degree() < 2) throw DomainError("needs an irrational algebraic number (degree >= 2)");
}

// Exact |alpha - p/q| < 1/q^2, or alpha == p/q.
bool dirichlet_holds(const AlgebraicNumber& alpha, const Integer& p, const Integer& q) {
  Rational c = make_rational(p, q);
  Rational r = Rational(1) / Rational(q * q);
  return alpha.compare(c - r) > 0 && alpha.compare(c + r) < 0;
}

class Expander {
 public:
  explicit Expander(const AlgebraicNumber& alpha) : alpha_(&alpha) { require_real(alpha); }

  // Next partial quotient; nullopt once a rational subject is exhausted.
  std::optional<Integer> next() {
    if (done_) return std::nullopt;
    Integer det = p1_ * q0_ - p0_ * q1_;
    int orient = det > 0 ? 1 : -1;
    auto at = [&](const Integer& a) { return make_rational(p1_ * a + p0_, q1_ * a + q0_); };
    auto ge = [&](const Integer& a) { return orient * alpha_->compare(at(a)) >= 0; };
    Integer a;
    if (q1_ == 0) {
      a = floor(alpha_->enclosure(Rational(1, 2)).lo);
      while (!ge(a)) --a;
      while (ge(a + 1)) ++a;
    } else {
      Integer lo = 1, hi = 2;
      while (ge(hi)) {
        lo = hi;
        hi *= 2;
      }
      while (hi - lo > 1) {
        Integer mid = (lo + hi) / 2;
        if (ge(mid))
          lo = mid;
        else
          hi = mid;
      }
      a = lo;
    }
    if (alpha_->compare(at(a)) == 0) done_ = true;
    Integer p = a * p1_ + p0_, q = a * q1_ + q0_;
    p0_ = p1_;
    q0_ = q1_;
    p1_ = p;
    q1_ = q;
    return a;
  }
  const Integer& p() const { return p1_; }
  const Integer& q() const { return q1_; }
  bool done() const { return done_; }

 private:
  const AlgebraicNumber* alpha_;
  Integer p1_ = 1, q1_ = 0, p0_ = 0, q0_ = 1;
  bool done_ = false;
};

void push(ContinuedFraction& cf, const AlgebraicNumber& alpha, const Integer& a, const Integer& p, const Integer& q) {
  if (!dirichlet_holds(alpha, p, q) && alpha.compare(make_rational(p, q)) != 0)
    throw InternalError("convergent violates |alpha - p/q| < 1/q^2");
  cf.partial_quotients.push_back(a);
  cf.convergents.emplace_back(p, q);
}

}  // namespace

ContinuedFraction continued_fraction(const AlgebraicNumber& alpha, std::size_t n_terms) {
  if (n_terms == 0) throw DomainError("need at least one partial quotient");
  Expander ex(alpha);
  ContinuedFraction cf;
  while (cf.partial_quotients.size() < n_terms) {
    auto a = ex.next();
    if (!a) break;
    push(cf, alpha, *a, ex.p(), ex.q());
  }
  cf.terminated = ex.done();
  return cf;
}

ContinuedFraction convergents_up_to(const AlgebraicNumber& alpha, const Integer& q_max) {
  if (q_max < 1) throw DomainError("q_max must be positive");
  Expander ex(alpha);
  ContinuedFraction cf;
  for (;;) {
    Expander probe = ex;
    auto a = probe.next();
    if (!a || probe.q() > q_max) break;
    ex = probe;
    push(cf, alpha, *a, ex.p(), ex.q());
  }
  cf.terminated = ex.done();
  return cf;
}

RealEnclosure liouville_constant(const AlgebraicNumber& alpha, const Rational& precision) {
  require_irrational(alpha);
  const IntPoly& f = alpha.min_poly();
  RealEnclosure big;
  bool first = true;
  for (const auto& m : root_moduli(f, precision)) {
    big = first ? m : max(big, m);
    first = false;
  }
  unsigned long n = alpha.degree();
  RealEnclosure denom = RealEnclosure::point(Rational(abs(f.leading()))) * pow(Rational(3) * big, n - 1);
  return min(big, RealEnclosure::point(1) / denom);
}

LiouvilleScan liouville_scan(const AlgebraicNumber& alpha, const Integer& q_max, unsigned long sweep) {
  require_irrational(alpha);
  LiouvilleScan out;
  long n = static_cast<long>(alpha.degree());
  std::vector<std::pair<Integer, Integer>> candidates;
  for (const auto& pq : convergents_up_to(alpha, q_max).convergents) candidates.push_back(pq);
  unsigned long top = q_max < sweep ? q_max.get_ui() : sweep;
  for (unsigned long q = 1; q <= top; ++q) {
    Integer qz(q);
    Integer p = floor(alpha.enclosure(Rational(1, 4 * q)).lo * Rational(qz));
    for (Integer d = -1; d <= 2; ++d) candidates.emplace_back(p + d, qz);
  }
  Rational precision(1, 1000000);
  out.constant = liouville_constant(alpha, precision);
  for (const auto& [p, q] : candidates) {
    ++out.checked;
    Rational centre = make_rational(p, q);
    Rational scale = Rational(1) / pow(Rational(q), n);
    bool decided = false;
    Rational prec = precision;
    RealEnclosure c = out.constant;
    for (int round = 0; round < 5 && !decided; ++round) {
      Rational r_hi = c.hi * scale, r_lo = c.lo * scale;
      if (alpha.compare(centre - r_hi) < 0 || alpha.compare(centre + r_hi) > 0) {
        decided = true;
      } else if (alpha.compare(centre - r_lo) >= 0 && alpha.compare(centre + r_lo) <= 0) {
        out.violations.push_back({p, q});
        decided = true;
      } else {
        prec /= 10000;
        c = liouville_constant(alpha, prec);
      }
    }
    if (!decided) throw PrecisionError("Liouville comparison undecided at q = " + to_string(q));
  }
  return out;
}

ApproxRecord approximation_record(const AlgebraicNumber& alpha, const Integer& p, const Integer& q) {
  require_irrational(alpha);
  if (q < 1) throw DomainError("denominator must be positive");
  ApproxRecord r{p, q, {}, std::nullopt, {}, dirichlet_holds(alpha, p, q)};
  Rational c = make_rational(p, q);
  Rational width = Rational(1) / Rational(q * q * pow(Integer(2), 40));
  const Rational rel = Rational(1) / Rational(pow(Integer(2), 30));
  bool ok = false;
  for (int round = 0; round < 12 && !ok; ++round, width /= Rational(pow(Integer(2), 40))) {
    RealEnclosure e = abs(alpha.enclosure(width) - RealEnclosure::point(c));
    if (e.lo > 0 && e.width() <= e.lo * rel) {
      r.error = e;
      ok = true;
    }
  }
  if (!ok) throw PrecisionError("approximation error could not be separated from zero");
  r.scaled_error = Rational(q * q) * r.error;
  if (q >= 2) {
    Rational w(1, 1000000000000L);
    RealEnclosure le = log_enclosure(r.error, w), lq = log_enclosure(Rational(q), w);
    r.exponent = (RealEnclosure::point(0) - le) / lq;
  }
  return r;
}

ExponentReport exponent_report(const AlgebraicNumber& alpha, const Integer& q_max, Exec exec, const Integer& q_min) {
  require_irrational(alpha);
  ContinuedFraction cf = convergents_up_to(alpha, q_max);
  std::erase_if(cf.convergents, [&](const auto& pq) { return pq.second < q_min; });
  ExponentReport out;
  const long count = static_cast<long>(cf.convergents.size());
  out.records.resize(cf.convergents.size());
  if (exec == Exec::parallel) {
    std::vector<std::string> errors(cf.convergents.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(max_threads())
    for (long k = 0; k < count; ++k) {
      auto i = static_cast<std::size_t>(k);
      try {
        out.records[i] = approximation_record(alpha, cf.convergents[i].first, cf.convergents[i].second);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
    for (const auto& e : errors)
      if (!e.empty()) throw PrecisionError(e);
  } else {
    for (std::size_t i = 0; i < cf.convergents.size(); ++i)
      out.records[i] = approximation_record(alpha, cf.convergents[i].first, cf.convergents[i].second);
  }
  for (const auto& r : out.records) {
    if (r.dirichlet) ++out.dirichlet_count;
    if (r.exponent) out.max_exponent = out.max_exponent ? max(*out.max_exponent, *r.exponent) : *r.exponent;
  }
  if (!out.records.empty()) {
    std::size_t start = out.records.size() / 2;
    out.hurwitz_liminf = out.records[start].scaled_error;
    for (std::size_t i = start + 1; i < out.records.size(); ++i)
      out.hurwitz_liminf = min(out.hurwitz_liminf, out.records[i].scaled_error);
  }
  return out;
}

}  // namespace dioph
