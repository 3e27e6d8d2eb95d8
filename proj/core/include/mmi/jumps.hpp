#pragma once

// Multiplicities of points, the jumping criterion and the perturbation sum
// rule for parallel rays.

#include <cstddef>
#include <optional>
#include <vector>

#include "mmi/engine.hpp"

namespace mmi {

/// (c.F)_j - k_j = level with level a positive integer.
struct WallMembership {
  std::size_t component;
  Integer level;

  friend bool operator==(const WallMembership&, const WallMembership&) = default;
};

struct JumpRecord {
  Point point;
  ZDivisor D;
  ZDivisor D_left;
  ReducedDivisor H;
  std::optional<ReducedDivisor> G;
  Integer mult;
  std::vector<WallMembership> wall_lines;
};

std::vector<WallMembership> wall_lines(const IdealTuple& t, const Point& c);

/// (ceil(K - cF) + H_c).H_c + #components(H_c)
Integer multiplicity(const IdealTuple& t, const Point& c);
/// Fractional-part form over full-graph adjacency. Throws NonIntegralTotal.
Integer multiplicity_fractional(const IdealTuple& t, const Point& c);
/// (ceil(K - lambda F) + G).G + #components(G). Throws NotAJumpingPoint.
Integer multiplicity_via_G(const IdealTuple& t, const Point& lambda);
/// colength(D_c) - colength(D_left)
Integer multiplicity_oracle(const IdealTuple& t, const Point& c);

/// Full record; the multiplicity is checked against the colength oracle and
/// InternalConsistency is thrown on disagreement.
JumpRecord jump_record(const IdealTuple& t, const Point& c);

struct JumpingVerdict {
  bool jumping = false;
  /// A connected component H of H_c with (ceil(K - cF) + H_c).H >= 0.
  std::vector<std::size_t> witness;
};

/// Criterion by connected components of H_c, checked against m(c) > 0.
JumpingVerdict is_jumping(const IdealTuple& t, const Point& c);

struct HInequality {
  /// One component, or one connected component of H_c.
  std::vector<std::size_t> support;
  bool connected_component = false;
  Integer value;
};

/// (ceil(K - cF) + H_c).E_i for E_i in H_c, then the same for each connected
/// component. Throws InequalityViolated if a value is below -1.
std::vector<HInequality> check_H_inequalities(const IdealTuple& t, const Point& c);

struct PerturbationCrossing {
  Point point;
  Rational mu;
  Integer mult;
  std::vector<WallMembership> lines;
};

struct PerturbationReport {
  Point lambda;
  std::vector<Integer> dir;
  std::vector<Rational> offset;
  Integer m_lambda;
  Integer sum;
  std::vector<PerturbationCrossing> crossings;

  bool holds() const { return m_lambda == sum; }
};

/// Crossings of lambda + offset + mu.dir with every wall hyperplane through
/// lambda. The offset is admissible when no other wall hyperplane meets the
/// convex hull of lambda and the crossings; otherwise OffsetTooLarge.
/// Throws NotAJumpingPoint, DirectionOrthogonal.
PerturbationReport perturbation_sum(const IdealTuple& t, const Point& lambda,
                                    const std::vector<Integer>& dir,
                                    const std::vector<Rational>& offset);

/// Same, with the first admissible offset among +-delta e_i (and
/// delta (e_a - e_b)) for delta = 2^-3, 2^-4, ...
PerturbationReport perturbation_sum(const IdealTuple& t, const Point& lambda,
                                    const std::vector<Integer>& dir);

}  // namespace mmi
