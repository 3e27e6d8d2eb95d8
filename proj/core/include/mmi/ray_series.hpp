#pragma once

// Jumping points along a rational ray and the Poincare series of the ray.

#include <optional>
#include <string>
#include <vector>

#include "mmi/jumps.hpp"

namespace mmi {

struct RayPoint {
  Rational mu;
  JumpRecord record;
};

/// Smallest mu' > after whose point is jumping. Throws DirectionOrthogonal
/// when dir.F_j = 0 for every j.
std::optional<RayPoint> ray_next(const IdealTuple& t, const Ray& ray, const Rational& after);

/// All jumping points with mu in (0, bound], in increasing order.
std::vector<RayPoint> ray_walk(const IdealTuple& t, const Ray& ray, const Rational& bound);

/// rho_{c,alpha} = sum over E_i in H_c of sum_l alpha_l rho_{l,i}
Integer rho(const IdealTuple& t, const Point& c, const std::vector<Integer>& alpha);

/// m0 t^anchor / (1 - t^u) + rho t^(anchor + u) / (1 - t^u)^2
struct SeriesTerm {
  Point anchor;
  Rational mu;
  Integer m0;
  Integer rho;
};

/// A single monomial m t^point.
struct SeriesMonomial {
  Point point;
  Rational mu;
  Integer m;
};

struct SeriesClosedForm {
  Ray ray;
  /// Jumping points before the recurrence takes over in their class.
  std::vector<SeriesMonomial> prefix;
  std::vector<SeriesTerm> terms;
  Integer exponent_denominator = 1;
};

/// Closed form of sum m(c) t^c over the ray, mu >= 0. Each residue class
/// of mu modulo 1 becomes one term from the first point p where no j with
/// (dir.F)_j > 0 has (p.F)_j - k_j a nonpositive integer; earlier jumping
/// points of the class go to the prefix. Throws HorizonTooSmall when such
/// a p lies beyond the horizon.
SeriesClosedForm poincare(const IdealTuple& t, const Ray& ray, const Rational& horizon);

/// First n monomials in ray order.
std::vector<SeriesMonomial> series_expand(const SeriesClosedForm& s, std::size_t n);

/// Text form over z_i = t_i^(1/e): "e = ..." on the first line, then one
/// summand per line.
std::string format_series(const SeriesClosedForm& s);

}  // namespace mmi
