#include "dioph/algebraic.hpp"

#include "dioph/factor.hpp"
#include "dioph/linalg.hpp"

namespace dioph {

namespace {

void validate_min_poly(const IntPoly& f) {
  if (f.is_zero() || f.degree() < 1) throw DomainError("minimal polynomial must have degree >= 1");
  if (f.leading() < 0) throw DomainError("minimal polynomial must have positive leading coefficient");
  if (content_and_primitive(f).first != 1) throw DomainError("minimal polynomial must be primitive");
  if (!is_irreducible(f)) throw DomainError("polynomial " + to_string(f) + " is reducible");
}

const Rational kLocateRadius(1, 1 << 20);

std::size_t locate_interval(const IntPoly& f, IsolatingInterval iv, const std::vector<Disk>& disks) {
  for (;;) {
    std::size_t hits = 0, last = 0;
    for (std::size_t j = 0; j < disks.size(); ++j) {
      const Disk& d = disks[j];
      if (d.center.im != 0) continue;
      if (d.center.re + d.radius < iv.lo || d.center.re - d.radius > iv.hi) continue;
      ++hits;
      last = j;
    }
    if (hits == 1) return last;
    if (hits == 0) throw InternalError("isolating interval matches no certified root");
    iv = refine_root(f, iv, (iv.hi - iv.lo) / 2);
  }
}

}  // namespace

AlgebraicNumber AlgebraicNumber::rational(const Rational& q) {
  return AlgebraicNumber(IntPoly{Integer(-q.get_num()), q.get_den()}, IsolatingInterval{q, q});
}

AlgebraicNumber AlgebraicNumber::real_root(const IntPoly& f, std::size_t k) {
  validate_min_poly(f);
  auto roots = isolate_real_roots(f);
  if (k >= roots.size()) throw DomainError("real root index out of range");
  return AlgebraicNumber(f, roots[k]);
}

AlgebraicNumber AlgebraicNumber::from_interval(const IntPoly& f, const IsolatingInterval& iv) {
  validate_min_poly(f);
  if (iv.lo > iv.hi) throw DomainError("interval with lo > hi");
  if (iv.exact()) {
    if (f.degree() != 1 || sign_at(f, iv.lo) != 0) throw DomainError("degenerate interval is not a root");
    return AlgebraicNumber(f, iv);
  }
  if (sign_at(f, iv.lo) == 0 || sign_at(f, iv.hi) == 0) throw DomainError("interval endpoint is a root");
  if (SturmSequence(f).count(iv.lo, iv.hi) != 1) throw DomainError("interval does not isolate a single root");
  return AlgebraicNumber(f, iv);
}

AlgebraicNumber AlgebraicNumber::conjugate(const IntPoly& f, std::size_t index) {
  validate_min_poly(f);
  if (index >= static_cast<std::size_t>(f.degree())) throw DomainError("conjugate index out of range");
  return AlgebraicNumber(f, ConjugateIndex{index});
}

std::optional<Rational> AlgebraicNumber::rational_value() const {
  if (f_.degree() != 1) return std::nullopt;
  return make_rational(-f_[0], f_[1]);
}

bool AlgebraicNumber::is_real() const {
  if (std::holds_alternative<IsolatingInterval>(sel_)) return true;
  return disk(kLocateRadius).center.im == 0;
}

std::size_t AlgebraicNumber::canonical_index() const {
  if (auto* c = std::get_if<ConjugateIndex>(&sel_)) return c->index;
  if (f_.degree() == 1) return 0;
  return locate_interval(f_, std::get<IsolatingInterval>(sel_), root_disks(f_, kLocateRadius));
}

IsolatingInterval AlgebraicNumber::interval() const {
  if (auto* iv = std::get_if<IsolatingInterval>(&sel_)) return *iv;
  if (auto q = rational_value()) return {*q, *q};
  Disk d = disk(kLocateRadius);
  if (d.center.im != 0) throw DomainError("non-real algebraic number has no isolating interval");
  return {d.center.re - d.radius, d.center.re + d.radius};
}

RealEnclosure AlgebraicNumber::enclosure(const Rational& width) const {
  IsolatingInterval iv = refine_root(f_, interval(), width);
  return {iv.lo, iv.hi};
}

Disk AlgebraicNumber::disk(const Rational& radius) const {
  if (auto q = rational_value()) return {ComplexRational(*q), 0};
  std::vector<Disk> disks = root_disks(f_, radius);
  if (auto* c = std::get_if<ConjugateIndex>(&sel_)) return disks[c->index];
  return disks[locate_interval(f_, std::get<IsolatingInterval>(sel_), disks)];
}

int AlgebraicNumber::compare(const Rational& t) const {
  if (auto q = rational_value()) return sign(*q - t);
  IsolatingInterval iv = interval();
  if (t <= iv.lo) return 1;
  if (t >= iv.hi) return -1;
  int st = sign_at(f_, t);
  return st == sign_at(f_, iv.lo) ? 1 : -1;
}

bool AlgebraicNumber::same_number(const AlgebraicNumber& o) const {
  return f_ == o.f_ && canonical_index() == o.canonical_index();
}

void require_same_field(const NFElement::Base& a, const NFElement::Base& b) {
  if (a.get() == b.get()) return;
  if (!a || !b || !a->same_number(*b)) throw DomainError("number field elements over different generators");
}

NFElement::NFElement(Base base, const RatPoly& rep) : base_(std::move(base)) {
  if (!base_) throw DomainError("number field element without a generator");
  rep_ = rem(rep, to_rational(base_->min_poly()));
}

NFElement::NFElement(Base base, const Rational& q) : NFElement(std::move(base), RatPoly::constant(q)) {}

NFElement NFElement::generator(Base base) { return NFElement(std::move(base), RatPoly::x()); }

std::optional<Rational> NFElement::rational_value() const {
  if (rep_.is_zero()) return Rational(0);
  if (rep_.degree() == 0) return rep_[0];
  return std::nullopt;
}

NFElement NFElement::pow(unsigned long k) const {
  NFElement acc(base_, Rational(1)), b = *this;
  while (k) {
    if (k & 1) acc = acc * b;
    b = b * b;
    k >>= 1;
  }
  return acc;
}

Disk NFElement::embed(const Disk& root) const {
  Disk acc{ComplexRational(0), 0};
  for (auto it = rep_.coeffs().rbegin(); it != rep_.coeffs().rend(); ++it)
    acc = acc * root + Disk{ComplexRational(*it), 0};
  return acc;
}

NFElement operator+(const NFElement& a, const NFElement& b) {
  require_same_field(a.base_, b.base_);
  return NFElement(a.base_, a.rep_ + b.rep_);
}

NFElement operator-(const NFElement& a, const NFElement& b) {
  require_same_field(a.base_, b.base_);
  return NFElement(a.base_, a.rep_ - b.rep_);
}

NFElement operator-(const NFElement& a) { return NFElement(a.base_, -a.rep_); }

NFElement operator*(const NFElement& a, const NFElement& b) {
  require_same_field(a.base_, b.base_);
  return NFElement(a.base_, a.rep_ * b.rep_);
}

NFElement operator*(const Rational& s, const NFElement& a) { return NFElement(a.base_, a.rep_ * s); }

bool operator==(const NFElement& a, const NFElement& b) {
  require_same_field(a.base_, b.base_);
  return a.rep_ == b.rep_;
}

NFElement nf_mul(const NFElement& a, const NFElement& b) { return a * b; }

IntPoly characteristic_poly(const NFElement& a) {
  std::size_t n = a.field_degree();
  // column j holds the coordinates of a * alpha^j
  RatRows m(n, RatVector(n, Rational(0)));
  NFElement col = a;
  NFElement alpha = NFElement::generator(a.base());
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) m[i][j] = col.rep().coeff(i);
    col = col * alpha;
  }
  // Faddeev-LeVerrier
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  RatRows mk(n, RatVector(n, Rational(0)));
  for (std::size_t k = 1; k <= n; ++k) {
    RatRows next(n, RatVector(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rational s = 0;
        for (std::size_t t = 0; t < n; ++t) s += m[i][t] * mk[t][j];
        next[i][j] = s;
      }
    for (std::size_t i = 0; i < n; ++i) next[i][i] += c[n - k + 1];
    mk = std::move(next);
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t t = 0; t < n; ++t) tr += m[i][t] * mk[t][i];
    c[n - k] = -tr / Rational(static_cast<unsigned long>(k));
  }
  return primitive_integer_form(RatPoly(std::move(c)));
}

IntPoly element_min_poly(const NFElement& a) { return squarefree_part(characteristic_poly(a)); }

IntPoly power_min_poly(const AlgebraicNumber& a, long m) {
  if (m == 0) throw DomainError("power 0 has no interesting minimal polynomial");
  auto base = std::make_shared<const AlgebraicNumber>(a);
  NFElement x = NFElement::generator(base);
  if (m < 0) {
    const IntPoly& f = a.min_poly();
    if (f[0] == 0) throw DomainError("negative power of zero");
    // alpha * (a_n alpha^{n-1} + ... + a_1) = -a_0
    std::vector<Rational> c;
    for (std::size_t i = 1; i < f.size(); ++i) c.push_back(Rational(f[i]) / Rational(-f[0]));
    x = NFElement(base, RatPoly(std::move(c)));
    m = -m;
  }
  return element_min_poly(x.pow(static_cast<unsigned long>(m)));
}

std::string to_string(const NFElement& a) { return to_string(a.rep(), 'a'); }

}  // namespace dioph
