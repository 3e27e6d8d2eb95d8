#pragma once

// Mixed multiplier ideal divisors D_c, their left limits, the maximal and
// minimal jumping divisors and region polytopes.
//
// J(a^c) = pi_* O(-D_c) with D_c the antinef closure of floor(c.F - K); two
// points have the same ideal iff they have the same D_c. One-sided limits
// along the radial direction (1 - eps) c are evaluated symbolically.

#include <cstddef>
#include <string>
#include <vector>

#include "mmi/divisor.hpp"
#include "mmi/dual_graph.hpp"
#include "mmi/numeric.hpp"

namespace mmi {

/// A point of the closed positive orthant.
struct Point {
  std::vector<Rational> coords;

  Point() = default;
  /// Throws InvalidPoint on a negative coordinate.
  explicit Point(std::vector<Rational> c);
  static Point origin(std::size_t r) { return Point(std::vector<Rational>(r, Rational(0))); }

  std::size_t size() const noexcept { return coords.size(); }
  const Rational& operator[](std::size_t i) const { return coords[i]; }
  bool has_zero_coordinate() const;
  /// Sum of coordinates; increases strictly along any ray.
  Rational weight() const;

  friend bool operator==(const Point&, const Point&) = default;
};

std::string format_point(const Point& p);
std::string format_point_csv(const Point& p, char sep = ';');
Point parse_point(std::string_view text);

/// base + mu * dir, mu >= 0.
struct Ray {
  Point base;
  std::vector<Integer> dir;

  /// Throws InvalidPoint when dir has a negative entry or is zero.
  Ray(Point b, std::vector<Integer> d);
  Point at(const Rational& mu) const;
};

/// sum_i c_i F_i
QDivisor weighted_F(const IdealTuple& t, const Point& c);
/// v_j = (c.F)_j - k_j
std::vector<Rational> jump_values(const IdealTuple& t, const Point& c);
/// ceil(K - c.F) = -floor(c.F - K)
ZDivisor ceil_divisor(const IdealTuple& t, const Point& c);

/// D_c
ZDivisor mmi_divisor(const IdealTuple& t, const Point& c);
/// floor of c.F - K in the limit (1 - eps) c, before closure.
ZDivisor limit_floor(const IdealTuple& t, const Point& c);
/// D_{(1-eps)c}
ZDivisor mmi_divisor_left(const IdealTuple& t, const Point& c);

/// Components with (c.F)_j - k_j a positive integer and (c.F)_j > 0; the
/// second condition only matters at the origin.
ReducedDivisor maximal_jumping_divisor(const IdealTuple& t, const Point& c);

/// True iff D_c differs from its left limit (equivalently m(c) > 0).
bool ideal_jumps(const IdealTuple& t, const Point& c);

/// Components with (lambda.F)_j = k_j + 1 + e_j^{(1-eps)lambda}.
/// Throws NotAJumpingPoint.
ReducedDivisor minimal_jumping_divisor(const IdealTuple& t, const Point& lambda);

/// e_{1,j} z_1 + ... + e_{r,j} z_r < rhs
struct HalfPlane {
  std::size_t component;
  std::vector<Integer> normal;
  Rational rhs;
};

/// Region polytope of a point: all points whose ideal contains J(a^c).
/// Implicit bounds z >= 0.
struct HalfPlaneSet {
  std::size_t dim = 0;
  std::vector<HalfPlane> constraints;

  /// Strict inequalities, z >= 0.
  bool contains(const Point& z) const;
};

/// One constraint per component, rhs = k_j + 1 + e_j^c.
HalfPlaneSet region(const IdealTuple& t, const Point& c);

/// A facet of the closure of a region polytope (excluding the coordinate
/// hyperplanes), with every component whose constraint defines it.
struct RegionFacet {
  std::vector<Integer> normal;  // primitive
  Rational rhs;
  std::vector<std::size_t> components;
  std::vector<Point> vertices;
  bool supported_by_rupture_or_dicritical = false;
};

struct RegionAnalysis {
  std::vector<Point> vertices;
  std::vector<RegionFacet> facets;
  /// Components whose constraint is facet-defining.
  std::vector<std::size_t> binding;
  /// Binding components that are neither rupture nor dicritical and share
  /// their facet with no rupture or dicritical component.
  std::vector<std::size_t> violations;

  bool valid() const noexcept { return violations.empty(); }
};

/// Exact vertex and facet enumeration of the closure of the region.
RegionAnalysis analyze_region(const IdealTuple& t, const HalfPlaneSet& region);

/// The tuple (a_i : i in indices) on the same resolution.
IdealTuple subtuple(const IdealTuple& t, const std::vector<std::size_t>& indices);

/// Components of c that are nonzero, as indices.
std::vector<std::size_t> nonzero_support(const Point& c);

}  // namespace mmi
