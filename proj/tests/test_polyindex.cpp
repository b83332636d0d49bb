#include "support.hpp"

#include "dioph/io.hpp"

#include <doctest.h>

using namespace dioph;
using namespace testing_support;

namespace {

QPoly M(const char* s, std::size_t arity = 0) { return parse_multi_poly(s, arity); }

IndexValue ind(const QPoly& p, const std::vector<Rational>& pt, const std::vector<unsigned long>& r) {
  return index_at(p, pt, r);
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

// Random polynomial with a forced zero of some order at the point.
QPoly random_vanishing(Rng& rng, const std::vector<Rational>& pt, unsigned max_partial) {
  std::size_t m = pt.size();
  QPoly p = random_qpoly(rng, m, max_partial > 1 ? max_partial - 1 : 1, 5, 4);
  for (std::size_t h = 0; h < m; ++h)
    if (rng.coin()) p = p * linear_factor(m, h, pt[h]);
  return p;
}

}  // namespace

TEST_SUITE("polyindex") {
  TEST_CASE("normalized derivatives") {
    CHECK(normalized_derivative(M("x^3"), {2}) == M("3x"));
    CHECK(normalized_derivative(M("x^2*y^3"), {1, 1}) == M("6x*y^2"));
    CHECK(normalized_derivative(M("(x-1)^4"), {4}) == M("1", 1));
    CHECK(normalized_derivative(M("x^2"), {3}).is_zero());
  }

  TEST_CASE("index examples") {
    QPoly p = M("(x1-1)^2*(x2-2)^3");
    CHECK(ind(p, {Rational(1), Rational(2)}, {2, 3}) == IndexValue::finite(2));
    CHECK(ind(M("x1*x2"), {Rational(0), Rational(0)}, {2, 3}) == IndexValue::finite(Rational(5, 6)));
    CHECK(ind(M("x1+x2+1"), {Rational(0), Rational(0)}, {1, 1}) == IndexValue::finite(0));
    CHECK(ind(QPoly(2), {Rational(0), Rational(0)}, {1, 1}).infinite);
    CHECK(to_string(ind(QPoly(2), {Rational(0), Rational(0)}, {1, 1})) == "inf");
    CHECK_THROWS_AS(ind(M("x1"), {Rational(0)}, {0}), DomainError);
    CHECK_THROWS_AS(ind(M("x1*x2"), {Rational(0)}, {1, 1}), DomainError);
  }

  TEST_CASE("index at algebraic points") {
    auto base = std::make_shared<const AlgebraicNumber>(AlgebraicNumber::real_root(parse_int_poly("x^2-2"), 1));
    NFElement a = NFElement::generator(base);
    NFElement zero(base, Rational(0));
    IndexValue v = index_at(M("(x1-x2)^2"), std::vector<NFElement>{a, a}, {3, 3}, zero);
    CHECK(v == IndexValue::finite(Rational(2, 3)));
    CHECK(index_at(M("x^2-2"), std::vector<NFElement>{a}, {2}, zero) == IndexValue::finite(Rational(1, 2)));
  }

  TEST_CASE("agrees with the Taylor-shift oracle") {
    Rng rng(41);
    for (int i = 0; i < 300; ++i) {
      std::size_t m = static_cast<std::size_t>(rng.uniform(1, 2));
      auto pt = random_point(rng, m);
      QPoly p = random_vanishing(rng, pt, 4);
      std::vector<unsigned long> r(m);
      for (auto& v : r) v = static_cast<unsigned long>(rng.uniform(1, 4));
      INFO(to_string(p), " at ", to_string(pt[0]), " r0=", r[0]);
      CHECK(ind(p, pt, r) == oracle_index(p, pt, r));
    }
  }

  TEST_CASE("index algebra") {
    Rng rng(42);
    for (int i = 0; i < 300; ++i) {
      std::size_t m = static_cast<std::size_t>(rng.uniform(1, 3));
      auto pt = random_point(rng, m);
      QPoly p = random_vanishing(rng, pt, 4), q = random_vanishing(rng, pt, 4);
      std::vector<unsigned long> r(m);
      for (auto& v : r) v = static_cast<unsigned long>(rng.uniform(1, 4));
      IndexValue ip = ind(p, pt, r), iq = ind(q, pt, r);
      CHECK(ind(p * q, pt, r) == ip + iq);
      IndexValue is = ind(p + q, pt, r);
      CHECK((ip <= is || iq <= is));
      Exponent idx(m);
      for (auto& v : idx) v = static_cast<unsigned>(rng.uniform(0, 2));
      IndexValue id = ind(normalized_derivative(p, idx), pt, r);
      if (!ip.infinite && !id.infinite) CHECK(id.value >= ip.value - weighted_sum(idx, r));
      unsigned long t = static_cast<unsigned long>(rng.uniform(1, 4));
      std::vector<unsigned long> tr(r);
      for (auto& v : tr) v *= t;
      IndexValue it = ind(p, pt, tr);
      if (!ip.infinite) CHECK(it == IndexValue::finite(ip.value / t));
      bool within = true;
      for (std::size_t h = 0; h < m; ++h) within = within && p.partial_degree(h) <= r[h];
      if (within && !p.is_zero()) CHECK(ip.value <= Rational(static_cast<unsigned long>(m)));
    }
  }

  TEST_CASE("derivative height bound") {
    Rng rng(43);
    for (int i = 0; i < 300; ++i) {
      QPoly p = random_qpoly(rng, 2, 4, 20, 6);
      if (p.is_zero()) continue;
      Exponent idx{static_cast<unsigned>(rng.uniform(0, 3)), static_cast<unsigned>(rng.uniform(0, 3))};
      QPoly d = normalized_derivative(p, idx);
      if (d.is_zero()) continue;
      // with H the max coefficient: H(d_I P) <= 2^{d_1 + d_2} H(P)
      auto maxc = [](const QPoly& f) {
        Rational v = 0;
        for (const auto& [e, c] : f.terms()) v = std::max(v, abs(c));
        return v;
      };
      unsigned ds = p.partial_degree(0) + p.partial_degree(1);
      CHECK(maxc(d) <= pow(Rational(2), static_cast<long>(ds)) * maxc(p));
    }
  }

  TEST_CASE("indices by weight") {
    auto idx = indices_by_weight({2, 1}, {2, 1});
    REQUIRE(idx.size() == 6);
    CHECK(idx[0] == Exponent{0, 0});
    CHECK(idx[1] == Exponent{1, 0});
    for (std::size_t i = 1; i < idx.size(); ++i)
      CHECK(weighted_sum(idx[i - 1], {2, 1}) <= weighted_sum(idx[i], {2, 1}));
  }
}
