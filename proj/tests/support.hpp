#pragma once
// Shared helpers for the test binaries: fixture cache, seeded generators,
// independent oracles that do not call into the library's own algorithms,
// and structural checks on jumping divisors.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "mmi/dual_graph.hpp"
#include "mmi/engine.hpp"
#include "mmi/fixture.hpp"
#include "mmi/jumps.hpp"
#include "mmi/numeric.hpp"

namespace mmi::test {

inline const IdealTuple& tuple(const std::string& name) {
  static std::map<std::string, IdealTuple> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, build_tuple(load_fixture(name))).first;
  return it->second;
}

inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"SMOOTH1", "CHAIN10", "RAT6", "NEST14", "PROP16"};
  return names;
}

inline Rational q(const char* text) { return parse_rational(text); }
inline Point P(const char* text) { return parse_point(text); }

inline ZDivisor Z(std::initializer_list<long> values) { return ZDivisor::from(values); }

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

/// Tree on n vertices with -E_i^2 >= valence + 1, hence negative definite.
inline IntMatrix random_tree_matrix(Rng& rng, std::size_t n) {
  IntMatrix m(n, std::vector<Integer>(n, Integer(0)));
  std::vector<long> valence(n, 0);
  for (std::size_t v = 1; v < n; ++v) {
    const auto parent = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(v) - 1));
    m[v][parent] = 1;
    m[parent][v] = 1;
    ++valence[v];
    ++valence[parent];
  }
  for (std::size_t v = 0; v < n; ++v) m[v][v] = -(valence[v] + uniform(rng, 1, 3));
  return m;
}

inline ZDivisor random_divisor(Rng& rng, std::size_t n, long lo = -3, long hi = 6) {
  ZDivisor d(n);
  for (std::size_t j = 0; j < n; ++j) d[j] = uniform(rng, lo, hi);
  return d;
}

/// Rational in [0, max_num] with denominator at most max_den.
inline Rational random_rational(Rng& rng, long max_num, long max_den) {
  const long den = uniform(rng, 1, max_den);
  Rational out(uniform(rng, 0, max_num * den), den);
  out.canonicalize();
  return out;
}

inline Point random_point(Rng& rng, std::size_t r, long max_num = 2, long max_den = 60,
                          bool strictly_positive = false) {
  std::vector<Rational> c(r);
  for (auto& x : c) {
    do {
      x = random_rational(rng, max_num, max_den);
    } while (strictly_positive && x == 0);
  }
  return Point(std::move(c));
}

/// A point on e_{.,j}.z = k_j + level for random j and level, solved for one
/// coordinate. Returns false when the solution is negative.
inline bool random_wall_point(Rng& rng, const IdealTuple& t, Point& out, long max_level = 8,
                              bool strictly_positive = false) {
  const auto& k = t.graph().canonical();
  const auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(t.n()) - 1));
  std::vector<std::size_t> free_axes;
  for (std::size_t i = 0; i < t.r(); ++i) {
    if (t.e(i, j) > 0) free_axes.push_back(i);
  }
  if (free_axes.empty()) return false;
  const std::size_t solve_for =
      free_axes[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(free_axes.size()) - 1))];
  const Rational target = k[j] + Rational(uniform(rng, 1, max_level));
  std::vector<Rational> c(t.r());
  Rational rest = 0;
  for (std::size_t i = 0; i < t.r(); ++i) {
    if (i == solve_for) continue;
    c[i] = random_rational(rng, 1, 24);
    if (strictly_positive && c[i] == 0) c[i] = Rational(1, 25);
    rest += c[i] * Rational(t.e(i, j));
  }
  c[solve_for] = (target - rest) / Rational(t.e(solve_for, j));
  if (c[solve_for] < 0 || (strictly_positive && c[solve_for] == 0)) return false;
  out = Point(std::move(c));
  return true;
}

/// Mix of generic points and points on wall hyperplanes.
inline Point random_test_point(Rng& rng, const IdealTuple& t, bool strictly_positive = false) {
  if (uniform(rng, 0, 2) > 0) {
    Point p;
    for (int attempt = 0; attempt < 20; ++attempt) {
      if (random_wall_point(rng, t, p, 8, strictly_positive)) return p;
    }
  }
  return random_point(rng, t.r(), 2, 60, strictly_positive);
}

// ---------------------------------------------------------------------------
// Independent oracles (plain int64 and a separate rational solver).

using I64Matrix = std::vector<std::vector<std::int64_t>>;

inline I64Matrix to_i64(const IntMatrix& m) {
  I64Matrix out(m.size(), std::vector<std::int64_t>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) out[i][j] = m[i][j].get_si();
  }
  return out;
}

/// Adds one E_j at a time to the first component with D.E_j > 0.
inline std::vector<std::int64_t> oracle_closure(const I64Matrix& m, std::vector<std::int64_t> d) {
  for (auto& x : d) x = std::max<std::int64_t>(x, 0);
  const std::size_t n = d.size();
  while (true) {
    bool changed = false;
    for (std::size_t j = 0; j < n && !changed; ++j) {
      std::int64_t dot = 0;
      for (std::size_t i = 0; i < n; ++i) dot += d[i] * m[i][j];
      if (dot > 0) {
        ++d[j];
        changed = true;
      }
    }
    if (!changed) return d;
  }
}

/// K from (K + E_i).E_i = -2 by Gauss-Jordan elimination on rationals.
inline std::vector<Rational> oracle_canonical(const I64Matrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(static_cast<long>(m[i][j]));
    a[i][n] = Rational(-2 - static_cast<long>(m[i][i]));
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (a[pivot][col] == 0) ++pivot;
    std::swap(a[pivot], a[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rational f = a[row][col] / a[col][col];
      for (std::size_t k = col; k <= n; ++k) a[row][k] -= f * a[col][k];
    }
  }
  std::vector<Rational> k(n);
  for (std::size_t i = 0; i < n; ++i) k[i] = a[i][n] / a[i][i];
  return k;
}

/// -D.(D + K)/2
inline Rational oracle_colength(const I64Matrix& m, const std::vector<Rational>& k,
                                const std::vector<std::int64_t>& d) {
  Rational total = 0;
  const std::size_t n = d.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Rational rhs = Rational(static_cast<long>(d[j])) + k[j];
      total += Rational(static_cast<long>(d[i])) * Rational(static_cast<long>(m[i][j])) * rhs;
    }
  }
  return -total / 2;
}

inline std::vector<std::int64_t> to_i64(const ZDivisor& d) {
  std::vector<std::int64_t> out;
  for (const auto& x : d.coeffs) out.push_back(x.get_si());
  return out;
}

inline ZDivisor from_i64(const std::vector<std::int64_t>& d) {
  ZDivisor out(d.size());
  for (std::size_t j = 0; j < d.size(); ++j) out[j] = Integer(static_cast<long>(d[j]));
  return out;
}

/// D_c from the definition, using only the oracle closure.
inline ZDivisor oracle_mmi_divisor(const IdealTuple& t, const Point& c) {
  const auto& k = t.graph().canonical();
  std::vector<std::int64_t> d(t.n());
  for (std::size_t j = 0; j < t.n(); ++j) {
    Rational v = -k[j];
    for (std::size_t i = 0; i < t.r(); ++i) v += c[i] * Rational(t.e(i, j));
    d[j] = floor_of(v).get_si();
  }
  return from_i64(oracle_closure(to_i64(t.graph().matrix()), d));
}

// ---------------------------------------------------------------------------
// Structural checks. Each returns an empty string on success.

inline std::size_t internal_degree(const DualGraph& g, const ReducedDivisor& s, std::size_t v) {
  std::size_t deg = 0;
  for (std::size_t w : g.neighbors(v)) deg += s.contains(w) ? 1 : 0;
  return deg;
}

/// Ends (or the single vertex) of each connected component of G are rupture
/// or dicritical.
inline std::string check_G_ends(const IdealTuple& t, const ReducedDivisor& G) {
  const auto& g = t.graph();
  for (const auto& comp : g.connected_components(G)) {
    for (std::size_t v : comp) {
      const bool end = comp.size() == 1 || internal_degree(g, G, v) == 1;
      if (end && !t.rupture_or_dicritical(v)) {
        return "end E" + std::to_string(v + 1) + " of G is neither rupture nor dicritical";
      }
    }
  }
  return {};
}

/// Multiplicity one: G connected, and no rupture or dicritical component of
/// G has two or more neighbors inside G.
inline std::string check_mult_one_structure(const IdealTuple& t, const ReducedDivisor& G) {
  const auto& g = t.graph();
  if (g.connected_components(G).size() != 1) return "G is not connected";
  for (std::size_t v : G.components()) {
    if (t.rupture_or_dicritical(v) && internal_degree(g, G, v) > 1) {
      return "rupture/dicritical E" + std::to_string(v + 1) + " is interior to G";
    }
  }
  return {};
}

/// At a multiplicity-one point where two facets meet: G is a chain whose two
/// ends are rupture or dicritical.
inline std::string check_two_ended_chain(const IdealTuple& t, const ReducedDivisor& G) {
  const auto& g = t.graph();
  if (g.connected_components(G).size() != 1) return "G is not connected";
  std::size_t ends = 0;
  for (std::size_t v : G.components()) {
    const std::size_t deg = internal_degree(g, G, v);
    if (deg > 2) return "G is not a chain";
    if (deg <= 1) {
      ends += 1;
      if (!t.rupture_or_dicritical(v)) {
        return "end E" + std::to_string(v + 1) + " is neither rupture nor dicritical";
      }
    }
  }
  if (G.count() == 1) return "G has a single component";
  if (ends != 2) return "G has " + std::to_string(ends) + " ends";
  return {};
}

}  // namespace mmi::test
