#pragma once

// Constancy regions in the plane (r = 2), C-facets, the log-canonical wall,
// axis thresholds, the Newton nest and the facet/nest correspondence.

#include <cstddef>
#include <string>
#include <vector>

#include "mmi/engine.hpp"
#include "mmi/jumps.hpp"

namespace mmi {

/// e_{1,j} z_1 + ... + e_{r,j} z_r = level + k_j
struct WallLine {
  std::size_t j;
  Integer level;
  std::vector<Integer> normal;
  Rational rhs;
};

WallLine make_wall_line(const IdealTuple& t, std::size_t j, const Integer& level);

/// A geometric line of the arrangement with every wall line lying on it.
struct ArrangementLine {
  std::vector<Integer> normal;  // primitive
  Rational rhs;
  std::vector<WallLine> members;
};

std::string format_line(const ArrangementLine& line);

/// The rectangle [0, x] x [0, y].
struct Box {
  Rational x;
  Rational y;
};

struct AtlasVertex {
  Point point;
  std::vector<std::size_t> lines;  // arrangement lines through the point
  ZDivisor D;
  Integer mult;
};

struct AtlasFace {
  std::vector<Point> polygon;  // counterclockwise
  Point representative;
  ZDivisor D;
  std::size_t region = 0;
};

struct AtlasEdge {
  std::size_t line;
  Point from;  // smaller x
  Point to;
  std::size_t below;
  std::size_t above;
  /// D_lower != D_upper
  bool jumping = false;
};

/// Maximal set of faces connected across non-jumping edges.
struct ConstancyRegion {
  ZDivisor D;
  std::vector<std::size_t> faces;
};

struct CFacet {
  std::size_t line;
  Point from;
  Point to;
  std::vector<std::size_t> edges;
  ZDivisor D_lower;
  ZDivisor D_upper;
  std::vector<Point> samples;
  std::vector<Integer> sample_mult;
  std::vector<ReducedDivisor> sample_G;
};

struct WallAtlas {
  Box box;
  std::vector<ArrangementLine> lines;
  std::vector<AtlasVertex> vertices;
  std::vector<AtlasFace> faces;
  std::vector<AtlasEdge> edges;
  std::vector<ConstancyRegion> regions;
  std::vector<CFacet> facets;
};

/// region(t, 0)
HalfPlaneSet lc_region(const IdealTuple& t);

/// min over j with e_{i,j} > 0 of (k_j + 1 + e_j^0) / e_{i,j}
Rational lct_axis(const IdealTuple& t, std::size_t i);

/// Components whose log-canonical facet hyperplane contains lct_i times the
/// i-th unit vector.
ReducedDivisor axis_Gprime(const IdealTuple& t, std::size_t i);

/// Rupture or dicritical components on the minimal subtree joining all the
/// axis divisors.
std::vector<std::size_t> newton_nest(const IdealTuple& t);

enum class Verdict { Bijection, DegenerateProportional, MultiplicityHypothesisFails, Mismatch };
std::string_view to_string(Verdict v) noexcept;

struct LcFacetReport {
  RegionFacet facet;
  Point sample;
  Integer mult;
  ReducedDivisor G;
};

struct NestReport {
  std::vector<Rational> lct;
  std::vector<ReducedDivisor> Gprime;
  std::vector<std::size_t> nest;
  std::vector<LcFacetReport> lc_facets;
  /// Points on the wall where the multiplicity is not one.
  std::vector<std::pair<Point, Integer>> failures;
  Verdict verdict = Verdict::Mismatch;
  /// e_{i,l}/e_{i,j} for the two nest components, in the degenerate case.
  std::vector<Rational> ratios;
};

NestReport bijection_report(const IdealTuple& t);

/// Exact arrangement of all wall lines meeting the box (r = 2).
/// Throws Unsupported (r != 2), BoxTooSmall.
WallAtlas cell_decomposition(const IdealTuple& t, const Box& box);

/// Facets of the atlas with two interior samples each.
std::vector<CFacet> c_facets(const IdealTuple& t, const WallAtlas& atlas);

/// Facets whose lower side is the region of the origin.
std::vector<std::size_t> lc_wall_facets(const IdealTuple& t, const WallAtlas& atlas);

/// Vertices of the atlas lying on two or more C-facets with distinct lines.
std::vector<std::size_t> facet_intersection_vertices(const WallAtlas& atlas);

}  // namespace mmi
