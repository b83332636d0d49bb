#include "support.hpp"

#include "dioph/io.hpp"

#include <doctest.h>

using namespace dioph;
using namespace testing_support;

namespace {

QPoly M(const char* s, std::size_t arity = 0) { return parse_multi_poly(s, arity); }

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

}  // namespace

TEST_SUITE("wronskian") {
  TEST_CASE("generalized Wronskian examples") {
    CHECK(generalized_wronskian({M("x"), M("2x")}, {{0}, {1}}).is_zero());
    CHECK(generalized_wronskian({M("x", 2), M("y", 2)}, {{0, 0}, {0, 1}}) == M("x", 2));
    CHECK_THROWS_AS(generalized_wronskian({M("x", 2), M("y", 2)}, {{0, 0}, {1, 1}}), DomainError);
  }

  TEST_CASE("independence examples") {
    auto a = are_linearly_independent({M("1", 1), M("x"), M("x^2")});
    CHECK(a.independent);
    CHECK(a.witness == std::vector<Exponent>{{0}, {1}, {2}});
    CHECK_FALSE(are_linearly_independent({M("x+y"), M("2x+2y")}).independent);
    CHECK(are_linearly_independent({M("x", 2), M("y", 2), M("x*y", 2)}).independent);
    CHECK_THROWS_AS(are_linearly_independent(std::vector<QPoly>(7, M("x"))), UnsupportedError);
  }

  TEST_CASE("agrees with the coefficient rank on random families") {
    Rng rng(51);
    for (int i = 0; i < 300; ++i) {
      auto fam = random_family(rng, rng.coin());
      auto r = are_linearly_independent(fam);
      CHECK(r.independent == (family_rank(fam) == fam.size()));
      CHECK(r.rank == family_rank(fam));
      if (r.independent) CHECK_FALSE(generalized_wronskian(fam, r.witness).is_zero());
    }
  }

  TEST_CASE("dependent families have only vanishing Wronskians") {
    Rng rng(52);
    int checked = 0;
    while (checked < 40) {
      auto fam = random_family(rng, true);
      if (fam.size() > 3 || family_rank(fam) == fam.size()) continue;
      std::size_t n = fam.size(), m = fam[0].arity();
      for (unsigned s = 0; s <= n * (n - 1) / 2; ++s)
        for (const auto& mus : admissible_tuples(n, m, s)) CHECK(generalized_wronskian(fam, mus).is_zero());
      ++checked;
    }
  }

  TEST_CASE("Kronecker substitution keeps independence") {
    Rng rng(53);
    for (int i = 0; i < 100; ++i) {
      auto fam = random_family(rng, false);
      if (family_rank(fam) != fam.size()) continue;
      std::vector<QPoly> uni;
      for (const auto& f : fam) uni.push_back(kronecker_substitute(f, 4));
      CHECK(family_rank(uni) == fam.size());
      CHECK(are_linearly_independent(uni).independent);
    }
  }

  TEST_CASE("serial and parallel agree") {
    Rng rng(54);
    for (int i = 0; i < 60; ++i) {
      auto fam = random_family(rng, rng.coin());
      auto s = are_linearly_independent(fam, Exec::serial);
      auto p = are_linearly_independent(fam, Exec::parallel);
      CHECK(s.independent == p.independent);
      CHECK(s.witness == p.witness);
      CHECK(s.tuples_checked == p.tuples_checked);
    }
  }

  TEST_CASE("admissible tuples") {
    for (const auto& t : admissible_tuples(3, 2, 2)) {
      unsigned total = 0;
      for (std::size_t i = 0; i < t.size(); ++i) {
        unsigned o = t[i][0] + t[i][1];
        CHECK(o <= i);
        total += o;
      }
      CHECK(total == 2);
    }
    CHECK(coefficient_rank({M("x+y"), M("x-y"), M("x", 2)}) == 2);
    CHECK_THROWS_AS(coefficient_rank({M("x+y"), M("x")}), DomainError);
  }
}
