// Property tests over seeded random inputs. Every generator is seeded
// explicitly so failures reproduce.

#include <algorithm>

#include "doctest.h"
#include "mmi/error.hpp"
#include "mmi/fixture.hpp"
#include "mmi/lattice.hpp"
#include "mmi/ray_series.hpp"
#include "support.hpp"

using namespace mmi;
using mmi::test::tuple;

namespace {

using test::Rng;
using test::uniform;

IdealTuple random_tuple(Rng& rng, std::size_t n, std::size_t r) {
  const auto g = std::make_shared<const DualGraph>(build_graph(test::random_tree_matrix(rng, n)));
  std::vector<ZDivisor> ideals;
  while (ideals.size() < r) {
    auto f = antinef_closure(*g, test::random_divisor(rng, n, -2, 5));
    if (!f.is_zero()) ideals.push_back(std::move(f));
  }
  return attach_ideals(g, std::move(ideals));
}

std::vector<Integer> random_alpha(Rng& rng, std::size_t r) {
  std::vector<Integer> alpha(r);
  do {
    for (auto& a : alpha) a = uniform(rng, 0, 2);
  } while (std::all_of(alpha.begin(), alpha.end(), [](const Integer& a) { return a == 0; }));
  return alpha;
}

Point shifted(const Point& c, const std::vector<Integer>& alpha) {
  std::vector<Rational> out = c.coords;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += Rational(alpha[i]);
  return Point(std::move(out));
}

/// No component with (alpha.F)_j > 0 has (c.F)_j - k_j a nonpositive integer.
bool periodicity_hypothesis(const IdealTuple& t, const Point& c, const std::vector<Integer>& alpha) {
  const auto v = jump_values(t, c);
  for (std::size_t j = 0; j < t.n(); ++j) {
    Integer s = 0;
    for (std::size_t i = 0; i < t.r(); ++i) s += alpha[i] * t.e(i, j);
    if (s > 0 && is_integral(v[j]) && v[j] <= 0) return false;
  }
  return true;
}

bool subset(const ReducedDivisor& a, const ReducedDivisor& b) {
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a.contains(j) && !b.contains(j)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("unloading agrees with unit steps and the int64 oracle on random trees") {
  Rng rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(uniform(rng, 1, 8));
    const auto m = test::random_tree_matrix(rng, n);
    const auto g = build_graph(m);
    const auto k = test::oracle_canonical(test::to_i64(m));
    CHECK(g.canonical().coeffs == k);
    for (int d_trial = 0; d_trial < 3; ++d_trial) {
      const auto d = test::random_divisor(rng, n);
      const auto fast = antinef_closure(g, d);
      CHECK(fast == antinef_closure_unit(g, d));
      CHECK(test::to_i64(fast) == test::oracle_closure(test::to_i64(m), test::to_i64(d)));
      CHECK(is_antinef(g, fast));
      CHECK(Rational(colength(g, fast)) == test::oracle_colength(test::to_i64(m), k, test::to_i64(fast)));
    }
  }
}

TEST_CASE("three routes to the multiplicity agree on fixtures") {
  Rng rng(31337);
  for (const auto& name : test::fixture_names()) {
    const auto& t = tuple(name);
    std::size_t jumping = 0;
    for (int trial = 0; trial < 500; ++trial) {
      const auto c = test::random_test_point(rng, t);
      CAPTURE(name);
      CAPTURE(format_point(c));
      const auto m = multiplicity(t, c);
      CHECK(m >= 0);
      CHECK(multiplicity_fractional(t, c) == m);
      CHECK(multiplicity_oracle(t, c) == m);
      CHECK(mmi_divisor(t, c) == test::oracle_mmi_divisor(t, c));
      CHECK(is_jumping(t, c).jumping == (m > 0));
      CHECK_NOTHROW(check_H_inequalities(t, c));
      if (m > 0) {
        ++jumping;
        CHECK(multiplicity_via_G(t, c) == m);
        CHECK(test::check_G_ends(t, minimal_jumping_divisor(t, c)) == "");
      }
    }
    CHECK(jumping > 50);
  }
}

TEST_CASE("three routes to the multiplicity agree on random rational trees") {
  Rng rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const auto t = random_tuple(rng, static_cast<std::size_t>(uniform(rng, 1, 7)),
                                static_cast<std::size_t>(uniform(rng, 1, 3)));
    for (int p = 0; p < 25; ++p) {
      const auto c = test::random_test_point(rng, t);
      const auto m = multiplicity_oracle(t, c);
      CHECK(multiplicity(t, c) == m);
      CHECK(multiplicity_fractional(t, c) == m);
      CHECK_NOTHROW(check_H_inequalities(t, c));
      if (m > 0) CHECK(multiplicity_via_G(t, c) == m);
    }
  }
}

TEST_CASE("ideals shrink as the weights grow") {
  Rng rng(4);
  for (const auto& name : test::fixture_names()) {
    const auto& t = tuple(name);
    for (int trial = 0; trial < 100; ++trial) {
      const auto c = test::random_test_point(rng, t);
      std::vector<Rational> bigger = c.coords;
      for (auto& x : bigger) x += test::random_rational(rng, 1, 12);
      const Point c2(std::move(bigger));
      CHECK(leq(mmi_divisor(t, c), mmi_divisor(t, c2)));
      CHECK(leq(mmi_divisor_left(t, c), mmi_divisor(t, c)));
    }
  }
}

TEST_CASE("left limit equals the value exactly when nothing jumps") {
  Rng rng(5);
  for (const auto& name : test::fixture_names()) {
    const auto& t = tuple(name);
    for (int trial = 0; trial < 200; ++trial) {
      const auto c = test::random_test_point(rng, t);
      const bool same = mmi_divisor_left(t, c) == mmi_divisor(t, c);
      CHECK(same == (multiplicity(t, c) == 0));
      ZDivisor floor_now = ceil_divisor(t, c);
      for (auto& x : floor_now.coeffs) x = -x;
      if (limit_floor(t, c) == floor_now) CHECK(same);
    }
  }
}

TEST_CASE("periodicity and recurrence under integer shifts") {
  Rng rng(6);
  for (const auto& name : test::fixture_names()) {
    const auto& t = tuple(name);
    int hypothesis_held = 0;
    for (int trial = 0; trial < 200; ++trial) {
      const auto c = test::random_test_point(rng, t, true);
      const auto alpha = random_alpha(rng, t.r());
      const auto c2 = shifted(c, alpha);
      const auto H = maximal_jumping_divisor(t, c);
      const auto H2 = maximal_jumping_divisor(t, c2);
      CHECK(subset(H, H2));
      if (!periodicity_hypothesis(t, c, alpha)) continue;
      ++hypothesis_held;
      CHECK(H == H2);
      CHECK(multiplicity(t, c2) - multiplicity(t, c) == rho(t, c, alpha));
    }
    CHECK(hypothesis_held > 150);
  }
}

TEST_CASE("recurrence needs the integrality hypothesis") {
  // On the smooth point c = 1 has v = 0: the shift c + 1 = 2 is a jump
  // while c is not, and rho at c is zero.
  const auto& t = tuple("SMOOTH1");
  const Point c({Rational(1)});
  CHECK(maximal_jumping_divisor(t, c).empty());
  CHECK_FALSE(maximal_jumping_divisor(t, Point({Rational(2)})).empty());
  CHECK(multiplicity(t, Point({Rational(2)})) - multiplicity(t, c) == 1);
  CHECK(rho(t, c, {1}) == 0);
}

TEST_CASE("regions contain only larger ideals") {
  Rng rng(8);
  for (const auto& name : test::fixture_names()) {
    const auto& t = tuple(name);
    for (int trial = 0; trial < 60; ++trial) {
      const auto c = test::random_test_point(rng, t);
      const auto poly = region(t, c);
      const auto D = mmi_divisor(t, c);
      int inside = 0;
      for (int s = 0; s < 20; ++s) {
        const auto z = test::random_point(rng, t.r(), 2, 40);
        if (!poly.contains(z)) continue;
        ++inside;
        CHECK(leq(mmi_divisor(t, z), D));
      }
      CHECK(poly.contains(c));
    }
  }
}

TEST_CASE("walks along random rays") {
  Rng rng(9);
  for (const auto& name : test::fixture_names()) {
    const auto& t = tuple(name);
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<Integer> dir(t.r());
      do {
        for (auto& d : dir) d = uniform(rng, 0, 3);
      } while (std::all_of(dir.begin(), dir.end(), [](const Integer& d) { return d == 0; }));
      const Ray ray(test::random_point(rng, t.r(), 1, 12), dir);
      const auto walk = ray_walk(t, ray, Rational(1));
      for (std::size_t i = 0; i < walk.size(); ++i) {
        CHECK(walk[i].record.mult > 0);
        if (i == 0) continue;
        CHECK(walk[i - 1].mu < walk[i].mu);
        CHECK(leq(walk[i - 1].record.D, walk[i].record.D));
        CHECK(walk[i - 1].record.D != walk[i].record.D);
      }
      // no jump is skipped: a probe between consecutive points sees the
      // ideal of the earlier one
      for (std::size_t i = 1; i < walk.size(); ++i) {
        const auto mid = ray.at((walk[i - 1].mu + walk[i].mu) / 2);
        CHECK(mmi_divisor(t, mid) == walk[i - 1].record.D);
      }
    }
  }
}

TEST_CASE("series expansion reproduces the walk on random rays") {
  Rng rng(10);
  for (const char* name : {"SMOOTH1", "CHAIN10", "RAT6"}) {
    const auto& t = tuple(name);
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<Integer> dir(t.r());
      do {
        for (auto& d : dir) d = uniform(rng, 0, 2);
      } while (std::all_of(dir.begin(), dir.end(), [](const Integer& d) { return d == 0; }));
      const Ray ray(test::random_point(rng, t.r(), 1, 8), dir);
      std::optional<SeriesClosedForm> s;
      for (Rational horizon = 2; !s; horizon *= 2) {
        try {
          s = poincare(t, ray, horizon);
        } catch (const Error& e) {
          REQUIRE(e.code() == Errc::HorizonTooSmall);
          REQUIRE(horizon < 64);
        }
      }
      const auto walk = ray_walk(t, ray, Rational(5, 2));
      // the series also counts the base point, the walk starts after it
      auto terms = series_expand(*s, walk.size() + 1);
      if (!terms.empty() && terms.front().mu == 0) terms.erase(terms.begin());
      terms.resize(std::min(terms.size(), walk.size()));
      REQUIRE(terms.size() == walk.size());
      for (std::size_t i = 0; i < walk.size(); ++i) {
        CHECK(terms[i].mu == walk[i].mu);
        CHECK(terms[i].m == walk[i].record.mult);
      }
    }
  }
}

TEST_CASE("fixtures survive emit and parse") {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = static_cast<std::size_t>(uniform(rng, 1, 8));
    const auto t = random_tuple(rng, n, static_cast<std::size_t>(uniform(rng, 1, 3)));
    Fixture f;
    f.name = "RANDOM" + std::to_string(trial);
    f.description = "random tree";
    f.matrix = t.graph().matrix();
    for (std::size_t j = 0; j < n; ++j) f.labels.push_back("E" + std::to_string(j + 1));
    for (const auto& d : t.divisors()) f.ideals.push_back(d.coeffs);
    f.expected.canonical = t.graph().canonical().coeffs;
    f.expected.lct = std::vector<Rational>{test::random_rational(rng, 3, 17)};
    f.expected.points.push_back({std::vector<Rational>(t.r(), Rational(1, 3)), Integer(0), {}});
    const auto text = emit_fixture(f);
    const auto back = parse_fixture(text);
    CHECK(back == f);
    CHECK(emit_fixture(back) == text);
    CHECK(build_tuple(back).divisors() == t.divisors());
  }
}
