#include "dioph/polyindex.hpp"

#include <sstream>

namespace dioph {

bool is_integral(const QPoly& p) {
  for (const auto& [e, c] : p.terms())
    if (c.get_den() != 1) return false;
  return true;
}

QPoly primitive_integer_form(const QPoly& p) {
  if (p.is_zero()) throw DomainError("primitive form of the zero polynomial");
  Integer l = 1, g = 0;
  for (const auto& [e, c] : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  for (const auto& [e, c] : p.terms()) {
    Integer v = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  Rational s = make_rational(l, g);
  if (p.terms().begin()->second < 0) s = -s;
  return s * p;
}

QPoly kronecker_substitute(const QPoly& p, unsigned d) {
  QPoly r(1);
  for (const auto& [e, c] : p.terms()) {
    unsigned long k = 0, scale = 1;
    for (auto eh : e) {
      k += eh * scale;
      scale *= d;
    }
    r.add_term(Exponent{static_cast<unsigned>(k)}, c);
  }
  return r;
}

std::string to_string(const QPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    bool constant = std::all_of(e.begin(), e.end(), [](unsigned v) { return v == 0; });
    Rational a = c;
    if (first) {
      if (a < 0) os << "-";
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    a = abs(a);
    bool need_star = false;
    if (a != 1 || constant) {
      if (a.get_den() == 1)
        os << a.get_num().get_str();
      else
        os << "(" << a.get_str() << ")";
      need_star = true;
    }
    for (std::size_t h = 0; h < e.size(); ++h) {
      if (e[h] == 0) continue;
      if (need_star) os << "*";
      os << "x" << (h + 1);
      if (e[h] > 1) os << "^" << e[h];
      need_star = true;
    }
    first = false;
  }
  return os.str();
}

std::string to_string(const IndexValue& v) { return v.infinite ? "inf" : to_string(v.value); }

Rational weighted_sum(const Exponent& index, const std::vector<unsigned long>& weights) {
  Rational s = 0;
  for (std::size_t h = 0; h < index.size(); ++h) s += Rational(index[h]) / Rational(weights[h]);
  return s;
}

void validate_weights(const std::vector<unsigned long>& weights, std::size_t arity) {
  if (weights.size() != arity) throw DomainError("weight vector length does not match arity");
  for (auto r : weights)
    if (r == 0) throw DomainError("weights must be positive integers");
}

std::vector<Exponent> indices_by_weight(const std::vector<unsigned>& bounds, const std::vector<unsigned long>& weights) {
  std::vector<std::pair<Rational, Exponent>> all;
  Exponent cur(bounds.size(), 0);
  for (;;) {
    all.emplace_back(weighted_sum(cur, weights), cur);
    std::size_t h = 0;
    while (h < cur.size() && cur[h] == bounds[h]) cur[h++] = 0;
    if (h == cur.size()) break;
    ++cur[h];
  }
  std::sort(all.begin(), all.end());
  std::vector<Exponent> out;
  out.reserve(all.size());
  for (auto& [w, e] : all) out.push_back(std::move(e));
  return out;
}

}  // namespace dioph
