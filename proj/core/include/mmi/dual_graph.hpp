#pragma once

// Dual graph of a log-resolution: intersection matrix, relative canonical
// divisor, fundamental cycle, and the ideal tuples attached to it.
//
// Components are 0-based internally; every label and every piece of I/O uses
// the 1-based names E1..En.

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "mmi/divisor.hpp"
#include "mmi/linalg.hpp"
#include "mmi/numeric.hpp"

namespace mmi {

using IntMatrix = linalg::IntMatrix;
using Edge = std::pair<std::size_t, std::size_t>;

enum class SingularityClass { LogTerminal, LogCanonicalOnly, Neither };

std::string_view to_string(SingularityClass c) noexcept;

class DualGraph {
 public:
  std::size_t size() const noexcept { return n_; }
  const Integer& entry(std::size_t i, std::size_t j) const { return m_[i * n_ + j]; }
  const Integer& self_intersection(std::size_t j) const { return entry(j, j); }
  IntMatrix matrix() const;

  const std::vector<std::size_t>& neighbors(std::size_t j) const { return adjacency_[j]; }
  std::size_t valence(std::size_t j) const { return adjacency_[j].size(); }
  std::vector<Edge> edges() const;

  /// Relative canonical divisor K: (K + E_j).E_j = -2 for every j.
  const QDivisor& canonical() const noexcept { return canonical_; }
  /// Smallest nonzero antinef divisor.
  const ZDivisor& fundamental_cycle() const noexcept { return fundamental_cycle_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// D.E_j
  Integer dot(const ZDivisor& d, std::size_t j) const;
  Rational dot(const QDivisor& d, std::size_t j) const;
  /// Bilinear form D.D'
  Integer form(const ZDivisor& a, const ZDivisor& b) const;
  Rational form(const ZDivisor& a, const QDivisor& b) const;

  /// Component sets of the subgraph induced by the support of `d`.
  std::vector<std::vector<std::size_t>> connected_components(const ReducedDivisor& d) const;
  /// Vertices on the unique tree path from `from` to `to`, both included.
  std::vector<std::size_t> tree_path(std::size_t from, std::size_t to) const;

 private:
  friend DualGraph build_graph(const IntMatrix&, std::vector<std::string>);
  DualGraph() = default;

  std::size_t n_ = 0;
  std::vector<Integer> m_;
  std::vector<std::vector<std::size_t>> adjacency_;
  QDivisor canonical_;
  ZDivisor fundamental_cycle_;
  std::vector<std::string> labels_;
};

/// Validates the matrix (symmetric, off-diagonal entries in {0,1}, tree,
/// negative definite) and computes K and Z eagerly.
/// Throws NotSymmetric, BadOffDiagonal, Disconnected, NotTree,
/// NotNegativeDefinite.
DualGraph build_graph(const IntMatrix& m, std::vector<std::string> labels = {});

/// Exact solution of M.K = (-2 - M[j][j])_j.
QDivisor relative_canonical(const DualGraph& g);

/// Antinef closure of E_start; the result is the same for every start.
ZDivisor fundamental_cycle(const DualGraph& g, std::size_t start = 0);

/// Rebuilds self-intersections from a tree and its canonical divisor:
/// E_i^2 = -(2 + sum_{j adj i} k_j) / (k_i + 1).
/// Throws DivisionByZero (k_i = -1) or NonIntegralSelfIntersection.
std::vector<Integer> derive_diagonal(std::size_t n, const std::vector<Edge>& edges,
                                     const QDivisor& canonical);

/// Convenience: matrix with the given edges and diagonal.
IntMatrix assemble_matrix(std::size_t n, const std::vector<Edge>& edges,
                          const std::vector<Integer>& diagonal);

SingularityClass singularity_class(const DualGraph& g);

/// A tuple of m-primary ideals given by their divisors F_i on a shared
/// resolution, with excesses rho_{i,j} = -F_i.E_j.
class IdealTuple {
 public:
  const DualGraph& graph() const noexcept { return *graph_; }
  std::shared_ptr<const DualGraph> graph_ptr() const noexcept { return graph_; }
  std::size_t r() const noexcept { return divisors_.size(); }
  std::size_t n() const noexcept { return graph_->size(); }

  const ZDivisor& divisor(std::size_t i) const { return divisors_[i]; }
  const std::vector<ZDivisor>& divisors() const noexcept { return divisors_; }
  /// e_{i,j}
  const Integer& e(std::size_t i, std::size_t j) const { return divisors_[i][j]; }
  const Integer& rho(std::size_t i, std::size_t j) const { return rho_[i][j]; }
  bool dicritical(std::size_t j) const { return dicritical_[j]; }
  bool rupture(std::size_t j) const { return rupture_[j]; }
  bool rupture_or_dicritical(std::size_t j) const { return dicritical_[j] || rupture_[j]; }

 private:
  friend IdealTuple attach_ideals(std::shared_ptr<const DualGraph>, std::vector<ZDivisor>);
  IdealTuple() = default;

  std::shared_ptr<const DualGraph> graph_;
  std::vector<ZDivisor> divisors_;
  std::vector<std::vector<Integer>> rho_;
  std::vector<bool> dicritical_;
  std::vector<bool> rupture_;
};

/// Throws LengthMismatch or NotAntinef (negative coefficient, zero divisor,
/// or F_i.E_j > 0).
IdealTuple attach_ideals(std::shared_ptr<const DualGraph> g, std::vector<ZDivisor> divisors);

}  // namespace mmi
