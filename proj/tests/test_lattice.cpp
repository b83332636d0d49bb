#include "support.hpp"

#include <doctest.h>

using namespace dioph;
using namespace testing_support;

namespace {

ConvexBody box(std::vector<Rational> c) {
  ConvexBody b;
  std::size_t n = c.size();
  b.forms.assign(n, RatVector(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) b.forms[i][i] = 1;
  b.bounds = std::move(c);
  return b;
}

std::size_t witness_rank(const IntRows& w) { return oracle_rank_int(w); }

}  // namespace

TEST_SUITE("lattice-min") {
  TEST_CASE("volumes") {
    CHECK(body_volume(box({1, 1})) == 4);
    CHECK(body_volume(box({Rational(1, 2), 3})) == 6);
    ConvexBody s{{{1, 1}, {0, 1}}, {1, 1}};
    CHECK(body_volume(s) == 4);
    ConvexBody singular{{{1, 1}, {2, 2}}, {1, 1}};
    CHECK_THROWS_AS(body_volume(singular), DomainError);
    CHECK_THROWS_AS(successive_minima(box({1, 0})), DomainError);
  }

  TEST_CASE("minima examples") {
    MinimaResult a = successive_minima(box({1, 1}));
    CHECK(a.lambdas == RatVector{1, 1});
    CHECK(a.witnesses == IntRows{{1, 0}, {0, 1}});
    MinimaResult b = successive_minima(box({Rational(1, 2), 3}));
    CHECK(b.lambdas == RatVector{Rational(1, 3), 2});
    CHECK(b.witnesses == IntRows{{0, 1}, {1, 0}});
    MinimaResult c = successive_minima(box({Rational(1, 5), Rational(1, 5)}));
    CHECK(c.lambdas == RatVector{5, 5});
  }

  TEST_CASE("Minkowski examples") {
    MinkowskiReport a = minkowski_check(box({1, 1}));
    CHECK(a.product == 4);
    CHECK(a.product == a.upper);
    CHECK(a.lower_ok);
    CHECK(a.upper_ok);
    MinkowskiReport b = minkowski_check(box({Rational(1, 2), 3}));
    CHECK(b.product == 4);
    CHECK(b.lower_ok);
    CHECK(b.upper_ok);
  }

  TEST_CASE("random bodies agree with the box oracle") {
    Rng rng(81);
    int checked = 0;
    for (int i = 0; i < 200; ++i) {
      std::size_t n = static_cast<std::size_t>(rng.uniform(2, 3));
      ConvexBody b = random_body(rng, n, 3, 5, 3);
      long R = oracle_box_radius(b);
      if (std::pow(2.0 * static_cast<double>(R) + 1, static_cast<double>(n)) > 2e5) continue;
      MinimaResult m = successive_minima(b);
      CHECK(m.lambdas == oracle_minima(b, R));
      CHECK(witness_rank(m.witnesses) == n);
      for (std::size_t k = 0; k < n; ++k) CHECK(gauge(b, m.witnesses[k]) == m.lambdas[k]);
      for (std::size_t k = 1; k < n; ++k) CHECK(m.lambdas[k - 1] <= m.lambdas[k]);
      ++checked;
    }
    CHECK(checked >= 100);
  }

  TEST_CASE("box reference matches the reduced enumeration") {
    Rng rng(82);
    int checked = 0;
    for (int i = 0; i < 100; ++i) {
      ConvexBody b = random_body(rng, static_cast<std::size_t>(rng.uniform(2, 3)), 3, 5, 3);
      MinimaResult fast = successive_minima(b);
      std::optional<MinimaResult> ref;
      try {
        ref = successive_minima_box(b);
      } catch (const UnsupportedError&) {
        continue;
      }
      CHECK(ref->lambdas == fast.lambdas);
      ++checked;
    }
    CHECK(checked >= 30);
  }

  TEST_CASE("scaling law") {
    Rng rng(83);
    for (int i = 0; i < 100; ++i) {
      std::size_t n = static_cast<std::size_t>(rng.uniform(2, 4));
      ConvexBody b = random_body(rng, n, 4, 5, 3);
      Rational s = make_rational(rng.uniform(1, 7), rng.uniform(1, 7));
      ConvexBody t = b;
      for (auto& c : t.bounds) c *= s;
      MinimaResult mb = successive_minima(b), mt = successive_minima(t);
      for (std::size_t k = 0; k < n; ++k) CHECK(mt.lambdas[k] == mb.lambdas[k] / s);
      CHECK(body_volume(t) == body_volume(b) * pow(s, static_cast<long>(n)));
      CHECK(minkowski_check(t).product == minkowski_check(b).product);
    }
  }

  TEST_CASE("unimodular invariance") {
    Rng rng(84);
    for (int i = 0; i < 100; ++i) {
      std::size_t n = static_cast<std::size_t>(rng.uniform(2, 4));
      ConvexBody b = random_body(rng, n, 4, 5, 3);
      // U = product of elementary shears
      RatRows u(n, RatVector(n, Rational(0)));
      for (std::size_t k = 0; k < n; ++k) u[k][k] = 1;
      for (int s = 0; s < 4; ++s) {
        std::size_t p = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
        std::size_t q = (p + 1 + static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 2))) % n;
        long f = rng.uniform(-2, 2);
        for (std::size_t r = 0; r < n; ++r) u[r][q] += f * u[r][p];
      }
      ConvexBody c = b;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t j = 0; j < n; ++j) {
          Rational v = 0;
          for (std::size_t k = 0; k < n; ++k) v += b.forms[r][k] * u[k][j];
          c.forms[r][j] = v;
        }
      CHECK(successive_minima(c).lambdas == successive_minima(b).lambdas);
    }
  }

  TEST_CASE("Minkowski bounds on random bodies") {
    Rng rng(85);
    for (int i = 0; i < 200; ++i) {
      ConvexBody b = random_body(rng, static_cast<std::size_t>(rng.uniform(2, 4)), 5, 9, 4);
      MinkowskiReport r = minkowski_check(b);
      CHECK(r.lower_ok);
      CHECK(r.upper_ok);
      CHECK(r.lower <= r.product);
      CHECK(r.product <= r.upper);
    }
  }

  TEST_CASE("serial and parallel agree") {
    Rng rng(86);
    for (int i = 0; i < 50; ++i) {
      ConvexBody b = random_body(rng, static_cast<std::size_t>(rng.uniform(2, 5)), 5, 9, 4);
      MinimaResult s = successive_minima(b, Exec::serial), p = successive_minima(b, Exec::parallel);
      CHECK(s.lambdas == p.lambdas);
      CHECK(s.witnesses == p.witnesses);
      CHECK(s.candidates == p.candidates);
    }
  }

  TEST_CASE("dimension cap") {
    CHECK_THROWS_AS(successive_minima(box({1, 1, 1, 1, 1, 1})), UnsupportedError);
  }
}
