#include "dioph/io.hpp"

#include <cctype>
#include <cstdio>

namespace dioph {

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, bool univariate) : s_(text), univariate_(univariate) {}

  QPoly parse() {
    Node n = expr();
    skip();
    if (pos_ < s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return to_poly(n);
  }

  std::size_t arity_used() const { return arity_; }

 private:
  // Polynomials are built at the end, once the arity is known.
  using Terms = std::map<std::vector<unsigned>, Rational>;
  struct Node {
    Terms terms;
  };

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_ + 1); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static std::vector<unsigned> padded(std::vector<unsigned> e, std::size_t n) {
    e.resize(std::max(e.size(), n), 0);
    return e;
  }
  static Terms normalize(const Terms& t) {
    std::size_t n = 0;
    for (const auto& [e, c] : t) n = std::max(n, e.size());
    Terms out;
    for (const auto& [e, c] : t) {
      auto& slot = out[padded(e, n)];
      slot += c;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
  }
  static Node add(const Node& a, const Node& b, int sign) {
    Terms t = a.terms;
    for (const auto& [e, c] : b.terms) t[e] += sign > 0 ? c : Rational(-c);
    return {normalize(t)};
  }
  static Node mul(const Node& a, const Node& b) {
    Terms t;
    for (const auto& [ea, ca] : a.terms)
      for (const auto& [eb, cb] : b.terms) {
        std::size_t n = std::max(ea.size(), eb.size());
        auto x = padded(ea, n), y = padded(eb, n);
        for (std::size_t i = 0; i < n; ++i) x[i] += y[i];
        t[x] += ca * cb;
      }
    return {normalize(t)};
  }

  Node expr() {
    skip();
    Node acc;
    bool first = true;
    for (;;) {
      int sign = 1;
      std::size_t before = pos_;
      if (eat('+')) {
      } else if (eat('-')) {
        sign = -1;
      } else if (!first) {
        pos_ = before;
        return acc;
      }
      Node t = term();
      acc = first ? (sign > 0 ? t : add(Node{}, t, -1)) : add(acc, t, sign);
      first = false;
    }
  }

  Node term() {
    Node acc = power();
    for (;;) {
      skip();
      if (eat('*')) {
        acc = mul(acc, power());
        continue;
      }
      // implicit product: "3x", "2(x+1)", "x y"
      if (pos_ < s_.size() && (s_[pos_] == '(' || std::isalpha(static_cast<unsigned char>(s_[pos_])) ||
                               std::isdigit(static_cast<unsigned char>(s_[pos_])))) {
        acc = mul(acc, power());
        continue;
      }
      return acc;
    }
  }

  Node power() {
    Node base = atom();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent must be a nonnegative integer");
      if (pos_ < s_.size() && (s_[pos_] == '.' || s_[pos_] == '/')) fail("exponent must be a nonnegative integer");
      unsigned long k = std::stoul(std::string(s_.substr(start, pos_ - start)));
      if (k > 10000) fail("exponent too large");
      Node r{{{std::vector<unsigned>{}, Rational(1)}}};
      for (unsigned long i = 0; i < k; ++i) r = mul(r, base);
      return r;
    }
    return base;
  }

  Node atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Node n = expr();
      if (!eat(')')) fail("expected ')'");
      return n;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return variable();
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Node number() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      std::size_t d = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (d == pos_) fail("malformed rational");
    } else if (pos_ < s_.size() && s_[pos_] == '.') {
      ++pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    Rational q;
    try {
      q = parse_rational(s_.substr(start, pos_ - start));
    } catch (const std::exception&) {
      pos_ = start;
      fail("malformed rational");
    }
    return {{{std::vector<unsigned>{}, q}}};
  }

  Node variable() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string name(s_.substr(start, pos_ - start));
    std::size_t index;
    if (univariate_) {
      if (uni_name_.empty()) uni_name_ = name;
      if (name != uni_name_) {
        pos_ = start;
        fail("second variable '" + name + "' in a univariate polynomial");
      }
      index = 0;
    } else if (name.size() == 1 && std::string("xyzw").find(name[0]) != std::string::npos) {
      index = std::string("xyzw").find(name[0]);
      letters_ = true;
    } else if (name.size() > 1 && name[0] == 'x' && name.find_first_not_of("0123456789", 1) == std::string::npos &&
               name[1] != '0') {
      index = std::stoul(name.substr(1)) - 1;
      indexed_ = true;
    } else {
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    if (letters_ && indexed_) {
      pos_ = start;
      fail("mixing x, y, z, w with x1, x2, ...");
    }
    arity_ = std::max(arity_, index + 1);
    std::vector<unsigned> e(index + 1, 0);
    e[index] = 1;
    return {{{e, Rational(1)}}};
  }

  QPoly to_poly(const Node& n) const {
    QPoly p(std::max<std::size_t>(arity_, 1));
    for (const auto& [e, c] : n.terms) p.add_term(padded(e, p.arity()), c);
    return p;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  bool univariate_;
  std::string uni_name_;
  bool letters_ = false, indexed_ = false;
  std::size_t arity_ = 0;
};

std::string approx_string(const RealEnclosure& e) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", e.approx());
  return buf;
}

std::vector<Rational> coeff_list(const Json& j) {
  if (!j.is_array()) throw ParseError("coefficient list must be an array", 1);
  std::vector<Rational> c;
  for (const auto& v : j) c.push_back(rational_from_json(v));
  return c;
}

}  // namespace

RatPoly parse_rat_poly(std::string_view text) {
  ExprParser p(text, true);
  QPoly q = p.parse();
  std::vector<Rational> c;
  for (const auto& [e, v] : q.terms()) {
    if (c.size() <= e[0]) c.resize(e[0] + 1, Rational(0));
    c[e[0]] = v;
  }
  return RatPoly(std::move(c));
}

IntPoly parse_int_poly(std::string_view text) {
  RatPoly f = parse_rat_poly(text);
  std::vector<Integer> c;
  for (const auto& v : f.coeffs()) {
    if (v.get_den() != 1) throw ParseError("expected integer coefficients", 1);
    c.push_back(v.get_num());
  }
  return IntPoly(std::move(c));
}

QPoly parse_multi_poly(std::string_view text, std::size_t arity) {
  ExprParser p(text, false);
  QPoly q = p.parse();
  if (arity == 0 || arity == q.arity()) return q;
  if (p.arity_used() > arity) throw ParseError("variable index exceeds the arity", 1);
  QPoly out(arity);
  for (const auto& [e, c] : q.terms()) {
    Exponent x(arity, 0);
    for (std::size_t h = 0; h < e.size() && h < arity; ++h) x[h] = e[h];
    out.add_term(x, c);
  }
  return out;
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(Integer(j.dump()));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::exception&) {
      throw ParseError("malformed rational '" + j.get<std::string>() + "'", 1);
    }
  }
  throw ParseError("expected a rational string", 1);
}

RatPoly rat_poly_from_json(const Json& j) {
  if (j.is_string()) return parse_rat_poly(j.get<std::string>());
  if (j.is_object() && j.contains("coeffs")) return RatPoly(coeff_list(j.at("coeffs")));
  if (j.is_array()) return RatPoly(coeff_list(j));
  throw ParseError("expected a polynomial", 1);
}

IntPoly int_poly_from_json(const Json& j) {
  RatPoly f = rat_poly_from_json(j);
  std::vector<Integer> c;
  for (const auto& v : f.coeffs()) {
    if (v.get_den() != 1) throw ParseError("expected integer coefficients", 1);
    c.push_back(v.get_num());
  }
  return IntPoly(std::move(c));
}

QPoly multi_poly_from_json(const Json& j) {
  if (j.is_string()) return parse_multi_poly(j.get<std::string>());
  if (!j.is_object() || !j.contains("arity") || !j.contains("terms")) throw ParseError("expected a multivariate polynomial", 1);
  std::size_t m = j.at("arity").get<std::size_t>();
  QPoly p(m);
  for (const auto& t : j.at("terms")) {
    Exponent e = t.at("exps").get<Exponent>();
    if (e.size() != m) throw ParseError("exponent length does not match arity", 1);
    p.add_term(e, rational_from_json(t.at("coeff")));
  }
  return p;
}

Json to_json(const Rational& q) { return to_string(q.get_num()) + "/" + to_string(q.get_den()); }
Json to_json(const Integer& z) { return to_string(z); }

Json to_json(const RealEnclosure& e) { return Json{{"lo", to_json(e.lo)}, {"hi", to_json(e.hi)}, {"approx", approx_string(e)}}; }

Json to_json(const HeightValue& h) {
  return Json{{"exact", h.exact ? to_json(*h.exact) : Json(nullptr)}, {"enclosure", to_json(h.enclosure)}};
}

Json to_json(const IndexValue& v) { return v.infinite ? Json("inf") : to_json(v.value); }

Json to_json(const IntPoly& f) {
  Json c = Json::array();
  for (const auto& v : f.coeffs()) c.push_back(to_json(v));
  return Json{{"coeffs", c}, {"text", to_string(f)}};
}

Json to_json(const RatPoly& f) {
  Json c = Json::array();
  for (const auto& v : f.coeffs()) c.push_back(to_json(v));
  return Json{{"coeffs", c}, {"text", to_string(f)}};
}

Json to_json(const QPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(Json{{"coeff", to_json(c)}, {"exps", e}});
  return Json{{"arity", p.arity()}, {"terms", terms}, {"text", to_string(p)}};
}

Json to_json(const IntVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

Json to_json(const NFElement& a) {
  Json c = Json::array();
  for (const auto& v : a.rep().coeffs()) c.push_back(to_json(v));
  return Json{{"rep", c}};
}

IntRows int_matrix_from_json(const Json& j) {
  const Json& rows = j.is_object() ? j.at("entries") : j;
  IntRows m;
  for (const auto& row : rows) {
    IntVector r;
    for (const auto& v : row) {
      Rational q = rational_from_json(v);
      if (q.get_den() != 1) throw ParseError("matrix entries must be integers", 1);
      r.push_back(q.get_num());
    }
    m.push_back(std::move(r));
  }
  if (j.is_object()) {
    if (j.contains("rows") && j.at("rows").get<std::size_t>() != m.size()) throw ParseError("row count mismatch", 1);
    if (j.contains("cols"))
      for (const auto& r : m)
        if (r.size() != j.at("cols").get<std::size_t>()) throw ParseError("column count mismatch", 1);
  }
  return m;
}

AlgebraicNumber algebraic_from_json(const Json& j) {
  if (j.is_string() || j.is_number_integer()) {
    std::string s = j.is_string() ? j.get<std::string>() : j.dump();
    if (s.find_first_of("abcdefghijklmnopqrstuvwxyz") == std::string::npos) return AlgebraicNumber::rational(rational_from_json(j));
  }
  if (!j.is_object() || !j.contains("poly")) throw ParseError("expected {\"poly\": ..., \"root\": k}", 1);
  IntPoly f = int_poly_from_json(j.at("poly"));
  if (j.contains("conjugate")) return AlgebraicNumber::conjugate(f, j.at("conjugate").get<std::size_t>());
  return AlgebraicNumber::real_root(f, j.value("root", std::size_t{0}));
}

NFMatrix nf_matrix_from_json(const Json& j) {
  if (!j.contains("base")) throw ParseError("number field matrix needs a base", 1);
  Json base = j.at("base");
  AlgebraicNumber alpha = base.contains("poly") ? algebraic_from_json(base)
                                                : AlgebraicNumber::real_root(int_poly_from_json(base), base.value("root", std::size_t{0}));
  NFMatrix m{std::make_shared<const AlgebraicNumber>(alpha), {}};
  for (const auto& row : j.at("entries")) {
    std::vector<NFElement> r;
    for (const auto& v : row) {
      const Json& rep = v.is_object() ? v.at("rep") : v;
      RatPoly p = rep.is_array() ? RatPoly(coeff_list(rep)) : RatPoly(std::vector<Rational>{rational_from_json(rep)});
      r.emplace_back(m.base, p);
    }
    m.entries.push_back(std::move(r));
  }
  return m;
}

ConvexBody body_from_json(const Json& j) {
  ConvexBody b;
  for (const auto& row : j.at("forms")) b.forms.push_back(coeff_list(row));
  b.bounds = coeff_list(j.at("bounds"));
  return b;
}

Json to_json(const ConvexBody& b) {
  Json forms = Json::array(), bounds = Json::array();
  for (const auto& row : b.forms) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(to_json(v));
    forms.push_back(r);
  }
  for (const auto& c : b.bounds) bounds.push_back(to_json(c));
  return Json{{"forms", forms}, {"bounds", bounds}};
}

}  // namespace dioph
