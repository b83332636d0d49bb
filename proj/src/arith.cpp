#include "dioph/arith.hpp"

#include <algorithm>
#include <cctype>
#include <random>

namespace dioph {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

Integer parse_signed_integer(std::string_view s, std::size_t offset) {
  std::string_view body = s;
  bool neg = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    neg = body.front() == '-';
    body.remove_prefix(1);
  }
  if (!all_digits(body)) throw ParseError("malformed integer '" + std::string(s) + "'", offset);
  Integer z(std::string(body), 10);
  return neg ? Integer(-z) : z;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::size_t first = 0;
  while (first < text.size() && std::isspace(static_cast<unsigned char>(text[first]))) ++first;
  std::size_t last = text.size();
  while (last > first && std::isspace(static_cast<unsigned char>(text[last - 1]))) --last;
  std::string_view s = text.substr(first, last - first);
  if (s.empty()) throw ParseError("empty rational", first);

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Integer num = parse_signed_integer(s.substr(0, slash), first);
    std::string_view den_text = s.substr(slash + 1);
    if (!all_digits(den_text)) throw ParseError("malformed denominator", first + slash + 1);
    Integer den(std::string(den_text), 10);
    if (den == 0) throw ParseError("zero denominator", first + slash + 1);
    return make_rational(num, den);
  }

  // decimal with optional exponent
  std::string_view mant = s;
  long exp10 = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    mant = s.substr(0, e);
    Integer ez = parse_signed_integer(s.substr(e + 1), first + e + 1);
    if (!ez.fits_slong_p() || abs(ez) > 100000) throw ParseError("exponent out of range", first + e + 1);
    exp10 = ez.get_si();
  }
  bool neg = false;
  if (!mant.empty() && (mant.front() == '-' || mant.front() == '+')) {
    neg = mant.front() == '-';
    mant.remove_prefix(1);
  }
  std::string digits;
  if (auto dot = mant.find('.'); dot != std::string_view::npos) {
    std::string_view ip = mant.substr(0, dot), fp = mant.substr(dot + 1);
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) || (ip.empty() && fp.empty()))
      throw ParseError("malformed decimal '" + std::string(s) + "'", first);
    digits = std::string(ip) + std::string(fp);
    exp10 -= static_cast<long>(fp.size());
  } else {
    if (!all_digits(mant)) throw ParseError("malformed number '" + std::string(s) + "'", first);
    digits = std::string(mant);
  }
  Rational q{Integer(digits, 10)};
  if (exp10 > 0) q *= pow(Integer(10), static_cast<unsigned long>(exp10));
  if (exp10 < 0) q /= pow(Integer(10), static_cast<unsigned long>(-exp10));
  q.canonicalize();
  return neg ? Rational(-q) : q;
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }
Integer abs(const Integer& z) { return z < 0 ? Integer(-z) : z; }

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer pow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Rational pow(const Rational& base, long exp) {
  if (exp < 0) {
    if (base == 0) throw DomainError("zero to a negative power");
    return pow(Rational(1 / base), -exp);
  }
  Rational r = make_rational(pow(base.get_num(), static_cast<unsigned long>(exp)),
                             pow(base.get_den(), static_cast<unsigned long>(exp)));
  return r;
}

int sign(const Rational& q) { return sgn(q); }
int sign(const Integer& z) { return sgn(z); }

namespace {

Integer pollard_rho(const Integer& n) {
  if (n % 2 == 0) return 2;
  std::mt19937_64 rng(0x5eed);
  for (;;) {
    Integer c = Integer(static_cast<unsigned long>(rng() % 1000 + 1));
    Integer x = 2, y = 2, d = 1;
    auto step = [&](const Integer& v) {
      Integer t = (v * v + c) % n;
      return t;
    };
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      Integer diff = abs(Integer(x - y));
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void factor_into(const Integer& n, std::vector<Integer>& primes) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    primes.push_back(n);
    return;
  }
  Integer d = pollard_rho(n);
  factor_into(d, primes);
  factor_into(Integer(n / d), primes);
}

}  // namespace

std::vector<std::pair<Integer, unsigned long>> factorize(const Integer& n_in) {
  if (n_in == 0) throw DomainError("cannot factor zero");
  Integer n = abs(n_in);
  std::vector<Integer> primes;
  for (unsigned long p = 2; p < 10000 && Integer(p) * p <= n; ++p) {
    while (n % p == 0) {
      primes.emplace_back(p);
      n /= p;
    }
  }
  factor_into(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<Integer, unsigned long>> out;
  for (const auto& p : primes) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.emplace_back(p, 1);
  }
  return out;
}

std::vector<Integer> positive_divisors(const Integer& n) {
  std::vector<Integer> divs{1};
  for (const auto& [p, e] : factorize(n)) {
    std::size_t base = divs.size();
    Integer pk = 1;
    for (unsigned long k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace dioph
