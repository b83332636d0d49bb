#include "dioph/poly.hpp"

#include "dioph/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace dioph {

RatPoly to_rational(const IntPoly& f) {
  std::vector<Rational> c(f.coeffs().begin(), f.coeffs().end());
  return RatPoly(std::move(c));
}

std::pair<Integer, IntPoly> content_and_primitive(const IntPoly& f) {
  if (f.is_zero()) throw DomainError("content of the zero polynomial");
  Integer g = 0;
  for (const auto& a : f.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
  std::vector<Integer> c;
  c.reserve(f.size());
  for (const auto& a : f.coeffs()) c.push_back(a / g);
  return {g, IntPoly(std::move(c))};
}

IntPoly normalize_primitive(const IntPoly& f) {
  auto [c, p] = content_and_primitive(f);
  return p.leading() < 0 ? -p : p;
}

IntPoly primitive_integer_form(const RatPoly& f) {
  if (f.is_zero()) throw DomainError("primitive form of the zero polynomial");
  Integer l = 1;
  for (const auto& a : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.get_den_mpz_t());
  std::vector<Integer> c;
  c.reserve(f.size());
  for (const auto& a : f.coeffs()) c.push_back(a.get_num() * (l / a.get_den()));
  return normalize_primitive(IntPoly(std::move(c)));
}

DivMod divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> r(a.coeffs());
  long db = b.degree();
  long da = a.degree();
  if (da < db) return {RatPoly(), a};
  std::vector<Rational> q(static_cast<std::size_t>(da - db + 1), Rational(0));
  Rational inv = 1 / b.leading();
  for (long i = da; i >= db; --i) {
    Rational t = r[static_cast<std::size_t>(i)] * inv;
    if (t == 0) continue;
    q[static_cast<std::size_t>(i - db)] = t;
    for (long j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= t * b[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(db));
  return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

RatPoly rem(const RatPoly& a, const RatPoly& b) { return divmod(a, b).remainder; }

std::optional<IntPoly> exact_divide(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.is_zero()) return IntPoly();
  long da = a.degree(), db = b.degree();
  if (da < db) return std::nullopt;
  std::vector<Integer> r(a.coeffs());
  std::vector<Integer> q(static_cast<std::size_t>(da - db + 1));
  const Integer& lb = b.leading();
  for (long i = da; i >= db; --i) {
    Integer& top = r[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    Integer t = top / lb;
    q[static_cast<std::size_t>(i - db)] = t;
    for (long j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= t * b[static_cast<std::size_t>(j)];
  }
  for (long i = 0; i < db; ++i)
    if (r[static_cast<std::size_t>(i)] != 0) return std::nullopt;
  return IntPoly(std::move(q));
}

RatPoly gcd(const RatPoly& a_in, const RatPoly& b_in) {
  RatPoly a = a_in, b = b_in;
  while (!b.is_zero()) {
    RatPoly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * Rational(1 / a.leading());
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  RatPoly g = gcd(to_rational(a), to_rational(b));
  return primitive_integer_form(g);
}

IntPoly squarefree_part(const IntPoly& f) {
  if (f.is_zero()) throw DomainError("squarefree part of the zero polynomial");
  if (f.degree() == 0) return IntPoly{Integer(1)};
  IntPoly g = gcd(f, f.derivative());
  auto q = exact_divide(normalize_primitive(f), g);
  if (!q) throw InternalError("gcd does not divide polynomial");
  return normalize_primitive(*q);
}

std::vector<std::pair<IntPoly, unsigned>> squarefree_decomposition(const IntPoly& f_in) {
  if (f_in.is_zero()) throw DomainError("squarefree decomposition of the zero polynomial");
  std::vector<std::pair<IntPoly, unsigned>> out;
  if (f_in.degree() == 0) return out;
  RatPoly f = to_rational(normalize_primitive(f_in));
  RatPoly df = f.derivative();
  RatPoly a = gcd(f, df);
  RatPoly b = divmod(f, a).quotient;
  RatPoly c = divmod(df, a).quotient;
  RatPoly d = c - b.derivative();
  unsigned i = 1;
  while (b.degree() > 0) {
    RatPoly g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(primitive_integer_form(g), i);
    b = divmod(b, g).quotient;
    c = divmod(d, g).quotient;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

Rational evaluate(const IntPoly& f, const Rational& x) {
  const Integer& p = x.get_num();
  const Integer& q = x.get_den();
  if (f.is_zero()) return 0;
  Integer acc = 0, qpow = 1;
  long n = f.degree();
  for (long i = n; i >= 0; --i) {
    acc = acc * p + f[static_cast<std::size_t>(i)] * qpow;
    qpow *= q;
  }
  // acc = q^n f(p/q)
  return make_rational(acc, pow(q, static_cast<unsigned long>(n)));
}

int sign_at(const IntPoly& f, const Rational& x) {
  if (f.is_zero()) return 0;
  const Integer& p = x.get_num();
  const Integer& q = x.get_den();
  Integer acc = 0, qpow = 1;
  for (long i = f.degree(); i >= 0; --i) {
    acc = acc * p + f[static_cast<std::size_t>(i)] * qpow;
    qpow *= q;
  }
  return sgn(acc);  // q^n > 0
}

RatPoly taylor_shift(const RatPoly& f, const Rational& a) {
  std::vector<Rational> c(f.coeffs());
  long n = f.degree();
  for (long i = 0; i < n; ++i)
    for (long j = n - 1; j >= i; --j) c[static_cast<std::size_t>(j)] += a * c[static_cast<std::size_t>(j + 1)];
  return RatPoly(std::move(c));
}

Integer resultant(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) return 0;
  long m = f.degree(), n = g.degree();
  if (m == 0 && n == 0) return 1;
  if (m == 0) return pow(f[0], static_cast<unsigned long>(n));
  if (n == 0) return pow(g[0], static_cast<unsigned long>(m));
  std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<Integer>> s(size, std::vector<Integer>(size, 0));
  for (long r = 0; r < n; ++r)
    for (long j = 0; j <= m; ++j)
      s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + j)] = f[static_cast<std::size_t>(m - j)];
  for (long r = 0; r < m; ++r)
    for (long j = 0; j <= n; ++j)
      s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + j)] = g[static_cast<std::size_t>(n - j)];
  return bareiss_determinant(std::move(s));
}

Rational cauchy_root_bound(const IntPoly& f) {
  if (f.degree() < 1) throw DomainError("root bound of a constant");
  Rational m = 0;
  for (long i = 0; i < f.degree(); ++i) m = std::max(m, abs(make_rational(f[static_cast<std::size_t>(i)], f.leading())));
  return 1 + m;
}

unsigned long euler_phi(unsigned long k) {
  unsigned long result = k, n = k;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

IntPoly cyclotomic(unsigned long k) {
  if (k == 0) throw DomainError("cyclotomic index 0");
  IntPoly f = IntPoly::monomial(Integer(1), k) - IntPoly{Integer(1)};
  for (unsigned long d = 1; d < k; ++d) {
    if (k % d) continue;
    auto q = exact_divide(f, cyclotomic(d));
    if (!q) throw InternalError("cyclotomic division failed");
    f = *q;
  }
  return f;
}

namespace {

template <class T>
std::string poly_to_string(const Polynomial<T>& f, char var) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = f.degree(); i >= 0; --i) {
    T a = f[static_cast<std::size_t>(i)];
    if (a == 0) continue;
    bool neg = a < 0;
    T mag = neg ? T(-a) : a;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    bool unit = mag == 1;
    if (!unit || i == 0) {
      std::string s = mag.get_str();
      if (s.find('/') != std::string::npos && i > 0)
        os << "(" << s << ")";
      else
        os << s;
    }
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

}  // namespace

std::string to_string(const IntPoly& f, char var) { return poly_to_string(f, var); }
std::string to_string(const RatPoly& f, char var) { return poly_to_string(f, var); }

}  // namespace dioph
