#include "mmi/engine.hpp"

#include <algorithm>
#include <map>

#include "mmi/error.hpp"
#include "mmi/lattice.hpp"
#include "mmi/linalg.hpp"

namespace mmi {

Point::Point(std::vector<Rational> c) : coords(std::move(c)) {
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] < 0) {
      throw Error(Errc::InvalidPoint,
                  "coordinate " + std::to_string(i + 1) + " is negative: " + to_string(coords[i]));
    }
  }
}

bool Point::has_zero_coordinate() const {
  return std::any_of(coords.begin(), coords.end(), [](const Rational& x) { return x == 0; });
}

Rational Point::weight() const {
  Rational s = 0;
  for (const auto& x : coords) s += x;
  return s;
}

std::string format_point(const Point& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ", ";
    out += to_string(p[i]);
  }
  return out + ")";
}

std::string format_point_csv(const Point& p, char sep) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += sep;
    out += to_string(p[i]);
  }
  return out;
}

Point parse_point(std::string_view text) { return Point(parse_rational_list(text)); }

Ray::Ray(Point b, std::vector<Integer> d) : base(std::move(b)), dir(std::move(d)) {
  if (dir.size() != base.size()) throw Error(Errc::LengthMismatch, "ray base and direction");
  bool nonzero = false;
  for (const auto& u : dir) {
    if (u < 0) throw Error(Errc::InvalidPoint, "ray direction must be nonnegative");
    if (u != 0) nonzero = true;
  }
  if (!nonzero) throw Error(Errc::InvalidPoint, "ray direction is zero");
}

Point Ray::at(const Rational& mu) const {
  std::vector<Rational> c(base.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = base[i] + mu * Rational(dir[i]);
  return Point(std::move(c));
}

namespace {

void check_point(const IdealTuple& t, const Point& c) {
  if (c.size() != t.r()) {
    throw Error(Errc::LengthMismatch, "point has " + std::to_string(c.size()) +
                                          " coordinates, tuple has " + std::to_string(t.r()) +
                                          " ideals");
  }
}

}  // namespace

QDivisor weighted_F(const IdealTuple& t, const Point& c) {
  check_point(t, c);
  QDivisor out(t.n());
  for (std::size_t i = 0; i < t.r(); ++i) {
    if (c[i] == 0) continue;
    for (std::size_t j = 0; j < t.n(); ++j) out[j] += c[i] * Rational(t.e(i, j));
  }
  return out;
}

std::vector<Rational> jump_values(const IdealTuple& t, const Point& c) {
  auto cf = weighted_F(t, c);
  const auto& k = t.graph().canonical();
  for (std::size_t j = 0; j < t.n(); ++j) cf[j] -= k[j];
  return std::move(cf.coeffs);
}

ZDivisor ceil_divisor(const IdealTuple& t, const Point& c) {
  const auto v = jump_values(t, c);
  ZDivisor out(t.n());
  for (std::size_t j = 0; j < t.n(); ++j) out[j] = -floor_of(v[j]);
  return out;
}

ZDivisor mmi_divisor(const IdealTuple& t, const Point& c) {
  const auto v = jump_values(t, c);
  ZDivisor floor_part(t.n());
  for (std::size_t j = 0; j < t.n(); ++j) floor_part[j] = floor_of(v[j]);
  return antinef_closure(t.graph(), floor_part);
}

ZDivisor limit_floor(const IdealTuple& t, const Point& c) {
  const auto cf = weighted_F(t, c);
  const auto& k = t.graph().canonical();
  ZDivisor out(t.n());
  for (std::size_t j = 0; j < t.n(); ++j) {
    const Rational v = cf[j] - k[j];
    out[j] = floor_of(v);
    // (1 - eps) c.F_j - k_j sits just below v when c.F_j > 0.
    if (is_integral(v) && cf[j] > 0) out[j] -= 1;
  }
  return out;
}

ZDivisor mmi_divisor_left(const IdealTuple& t, const Point& c) {
  return antinef_closure(t.graph(), limit_floor(t, c));
}

ReducedDivisor maximal_jumping_divisor(const IdealTuple& t, const Point& c) {
  const auto cf = weighted_F(t, c);
  const auto& k = t.graph().canonical();
  const auto left = limit_floor(t, c);
  ReducedDivisor h(t.n());
  for (std::size_t j = 0; j < t.n(); ++j) {
    const Rational v = cf[j] - k[j];
    // A component with (c.F)_j = 0 does not move under c -> (1-eps)c, so an
    // integral v_j = -k_j > 0 there is no jump.
    h.support[j] = is_integral(v) && v > 0 && cf[j] > 0;
    // Ceiling-difference form: ceil(K - (1-eps)cF) - ceil(K - cF) is 1 exactly
    // where the limit floor drops; it agrees with H wherever ceil(K - cF) < 0.
    const Integer floor_v = floor_of(v);
    const bool drops = floor_v - left[j] == 1;
    const bool negative_ceiling = -floor_v < 0;
    if (h.support[j] != (drops && negative_ceiling)) {
      throw Error(Errc::InternalConsistency,
                  "maximal jumping divisor disagrees with the ceiling difference at E" +
                      std::to_string(j + 1));
    }
  }
  return h;
}

bool ideal_jumps(const IdealTuple& t, const Point& c) {
  return mmi_divisor(t, c) != mmi_divisor_left(t, c);
}

ReducedDivisor minimal_jumping_divisor(const IdealTuple& t, const Point& lambda) {
  const auto left = mmi_divisor_left(t, lambda);
  if (left == mmi_divisor(t, lambda)) {
    throw Error(Errc::NotAJumpingPoint, format_point(lambda) + " is not a jumping point");
  }
  const auto cf = weighted_F(t, lambda);
  const auto& k = t.graph().canonical();
  ReducedDivisor g(t.n());
  for (std::size_t j = 0; j < t.n(); ++j) {
    g.support[j] = cf[j] == k[j] + 1 + Rational(left[j]);
  }
  return g;
}

bool HalfPlaneSet::contains(const Point& z) const {
  if (z.size() != dim) return false;
  for (const auto& x : z.coords) {
    if (x < 0) return false;
  }
  for (const auto& h : constraints) {
    Rational lhs = 0;
    for (std::size_t i = 0; i < dim; ++i) lhs += Rational(h.normal[i]) * z[i];
    if (!(lhs < h.rhs)) return false;
  }
  return true;
}

HalfPlaneSet region(const IdealTuple& t, const Point& c) {
  const auto d = mmi_divisor(t, c);
  const auto& k = t.graph().canonical();
  HalfPlaneSet out;
  out.dim = t.r();
  for (std::size_t j = 0; j < t.n(); ++j) {
    HalfPlane h;
    h.component = j;
    h.normal.resize(t.r());
    for (std::size_t i = 0; i < t.r(); ++i) h.normal[i] = t.e(i, j);
    h.rhs = k[j] + 1 + Rational(d[j]);
    out.constraints.push_back(std::move(h));
  }
  return out;
}

namespace {

struct Hyperplane {
  std::vector<Integer> normal;  // primitive, nonnegative
  Rational rhs;
  std::vector<std::size_t> components;
};

std::vector<Hyperplane> distinct_hyperplanes(const HalfPlaneSet& region) {
  std::map<std::pair<std::vector<Integer>, Rational>, std::size_t> index;
  std::vector<Hyperplane> out;
  for (const auto& h : region.constraints) {
    Integer g = 0;
    for (const auto& a : h.normal) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    if (g == 0) continue;
    std::vector<Integer> normal(h.normal.size());
    for (std::size_t i = 0; i < normal.size(); ++i) normal[i] = h.normal[i] / g;
    const Rational rhs = h.rhs / Rational(g);
    auto key = std::make_pair(normal, rhs);
    auto it = index.find(key);
    if (it == index.end()) {
      index.emplace(key, out.size());
      out.push_back(Hyperplane{std::move(normal), rhs, {h.component}});
    } else {
      out[it->second].components.push_back(h.component);
    }
  }
  return out;
}

Rational evaluate(const std::vector<Integer>& normal, const std::vector<Rational>& z) {
  Rational s = 0;
  for (std::size_t i = 0; i < z.size(); ++i) s += Rational(normal[i]) * z[i];
  return s;
}

}  // namespace

RegionAnalysis analyze_region(const IdealTuple& t, const HalfPlaneSet& region) {
  const std::size_t r = region.dim;
  const auto planes = distinct_hyperplanes(region);

  // Candidate tight sets: r equations drawn from the hyperplanes and the
  // coordinate hyperplanes z_i = 0.
  const std::size_t total = planes.size() + r;
  auto row_of = [&](std::size_t idx) {
    std::vector<Rational> row(r, Rational(0));
    Rational rhs = 0;
    if (idx < planes.size()) {
      for (std::size_t i = 0; i < r; ++i) row[i] = planes[idx].normal[i];
      rhs = planes[idx].rhs;
    } else {
      row[idx - planes.size()] = 1;
    }
    return std::make_pair(row, rhs);
  };
  auto feasible = [&](const std::vector<Rational>& z) {
    for (const auto& x : z) {
      if (x < 0) return false;
    }
    for (const auto& p : planes) {
      if (evaluate(p.normal, z) > p.rhs) return false;
    }
    return true;
  };

  RegionAnalysis out;
  std::vector<std::vector<Rational>> vertices;
  std::vector<std::size_t> pick(r);
  for (std::size_t i = 0; i < r; ++i) pick[i] = i;
  while (r > 0 && total >= r) {
    linalg::RatMatrix a;
    std::vector<Rational> b;
    for (std::size_t idx : pick) {
      auto [row, rhs] = row_of(idx);
      a.push_back(std::move(row));
      b.push_back(std::move(rhs));
    }
    if (auto z = linalg::solve(std::move(a), std::move(b)); z && feasible(*z)) {
      if (std::find(vertices.begin(), vertices.end(), *z) == vertices.end()) {
        vertices.push_back(std::move(*z));
      }
    }
    // next combination
    std::size_t pos = r;
    while (pos > 0 && pick[pos - 1] == total - r + pos - 1) --pos;
    if (pos == 0) break;
    ++pick[pos - 1];
    for (std::size_t i = pos; i < r; ++i) pick[i] = pick[i - 1] + 1;
  }
  std::sort(vertices.begin(), vertices.end());
  for (const auto& v : vertices) out.vertices.emplace_back(v);

  for (const auto& p : planes) {
    std::vector<std::vector<Rational>> tight;
    for (const auto& v : vertices) {
      if (evaluate(p.normal, v) == p.rhs) tight.push_back(v);
    }
    if (tight.empty()) continue;
    linalg::RatMatrix diffs;
    for (std::size_t i = 1; i < tight.size(); ++i) {
      std::vector<Rational> d(r);
      for (std::size_t k = 0; k < r; ++k) d[k] = tight[i][k] - tight[0][k];
      diffs.push_back(std::move(d));
    }
    if (linalg::rank(diffs) + 1 != r) continue;
    RegionFacet facet;
    facet.normal = p.normal;
    facet.rhs = p.rhs;
    facet.components = p.components;
    std::sort(facet.components.begin(), facet.components.end());
    for (auto& v : tight) facet.vertices.emplace_back(std::move(v));
    for (std::size_t j : facet.components) {
      if (t.rupture_or_dicritical(j)) facet.supported_by_rupture_or_dicritical = true;
    }
    for (std::size_t j : facet.components) {
      out.binding.push_back(j);
      if (!facet.supported_by_rupture_or_dicritical) out.violations.push_back(j);
    }
    out.facets.push_back(std::move(facet));
  }
  std::sort(out.binding.begin(), out.binding.end());
  std::sort(out.violations.begin(), out.violations.end());
  return out;
}

IdealTuple subtuple(const IdealTuple& t, const std::vector<std::size_t>& indices) {
  std::vector<ZDivisor> picked;
  for (std::size_t i : indices) picked.push_back(t.divisor(i));
  return attach_ideals(t.graph_ptr(), std::move(picked));
}

std::vector<std::size_t> nonzero_support(const Point& c) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] != 0) out.push_back(i);
  }
  return out;
}

}  // namespace mmi
