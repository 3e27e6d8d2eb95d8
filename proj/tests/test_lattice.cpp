#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "mmi/error.hpp"
#include "mmi/lattice.hpp"
#include "support.hpp"

using namespace mmi;
using mmi::test::tuple;
using mmi::test::Z;

TEST_CASE("closure examples") {
  const auto& chain = tuple("CHAIN10").graph();
  const auto start = Z({0, 0, 0, 0, 1, 0, 0, 0, 0, -1});
  CHECK(antinef_closure(chain, start) == Z({1, 1, 1, 2, 3, 1, 1, 2, 3, 4}));
  CHECK(antinef_closure_unit(chain, start) == Z({1, 1, 1, 2, 3, 1, 1, 2, 3, 4}));

  const auto& rat = tuple("RAT6").graph();
  ZDivisor floor_minus_k(rat.size());
  for (std::size_t j = 0; j < rat.size(); ++j) floor_minus_k[j] = floor_of(-rat.canonical()[j]);
  CHECK(floor_minus_k == Z({0, 1, -1, 0, 0, 0}));
  CHECK(antinef_closure(rat, floor_minus_k) == Z({3, 2, 3, 1, 1, 1}));
  CHECK(colength(rat, Z({3, 2, 3, 1, 1, 1})) == 1);
  CHECK(colength(rat, ZDivisor(6)) == 0);
}

TEST_CASE("antinef divisors are fixed points") {
  for (const auto& name : test::fixture_names()) {
    const auto& t = tuple(name);
    for (const auto& f : t.divisors()) {
      CHECK(is_antinef(t.graph(), f));
      CHECK(antinef_closure(t.graph(), f) == f);
    }
    CHECK(is_antinef(t.graph(), t.graph().fundamental_cycle()));
  }
}

TEST_CASE("closure is independent of the scan order") {
  const auto& g = tuple("NEST14").graph();
  test::Rng rng(7);
  std::vector<std::size_t> order(g.size());
  std::iota(order.begin(), order.end(), 0);
  for (int trial = 0; trial < 50; ++trial) {
    const auto d = test::random_divisor(rng, g.size(), -4, 9);
    std::shuffle(order.begin(), order.end(), rng);
    CHECK(antinef_closure(g, d, order) == antinef_closure(g, d));
  }
}

TEST_CASE("colength agrees with the independent oracle") {
  for (const auto& name : test::fixture_names()) {
    const auto& g = tuple(name).graph();
    const auto m = test::to_i64(g.matrix());
    const auto k = test::oracle_canonical(m);
    CHECK(k == g.canonical().coeffs);
    for (const auto& f : tuple(name).divisors()) {
      CHECK(Rational(colength(g, f)) == test::oracle_colength(m, k, test::to_i64(f)));
    }
  }
}

TEST_CASE("colength rejects non-antinef input") {
  const auto& g = tuple("RAT6").graph();
  CHECK_THROWS_AS(colength(g, Z({1, 0, 0, 0, 0, 0})), Error);
  try {
    colength(g, Z({1, 0, 0, 0, 0, 0}));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotAntinef);
  }
}
