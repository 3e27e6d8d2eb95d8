#include "mmi/dual_graph.hpp"

#include <algorithm>
#include <functional>

#include "mmi/error.hpp"
#include "mmi/lattice.hpp"

namespace mmi {

std::string_view to_string(SingularityClass c) noexcept {
  switch (c) {
    case SingularityClass::LogTerminal: return "LogTerminal";
    case SingularityClass::LogCanonicalOnly: return "LogCanonicalOnly";
    case SingularityClass::Neither: return "Neither";
  }
  return "Unknown";
}

IntMatrix DualGraph::matrix() const {
  IntMatrix out(n_, std::vector<Integer>(n_));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) out[i][j] = entry(i, j);
  }
  return out;
}

std::vector<Edge> DualGraph::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j : adjacency_[i]) {
      if (i < j) out.emplace_back(i, j);
    }
  }
  return out;
}

Integer DualGraph::dot(const ZDivisor& d, std::size_t j) const {
  Integer out = self_intersection(j) * d[j];
  for (std::size_t k : adjacency_[j]) out += d[k];
  return out;
}

Rational DualGraph::dot(const QDivisor& d, std::size_t j) const {
  Rational out = Rational(self_intersection(j)) * d[j];
  for (std::size_t k : adjacency_[j]) out += d[k];
  return out;
}

Integer DualGraph::form(const ZDivisor& a, const ZDivisor& b) const {
  Integer out = 0;
  for (std::size_t j = 0; j < n_; ++j) out += a[j] * dot(b, j);
  return out;
}

Rational DualGraph::form(const ZDivisor& a, const QDivisor& b) const {
  Rational out = 0;
  for (std::size_t j = 0; j < n_; ++j) out += Rational(a[j]) * dot(b, j);
  return out;
}

std::vector<std::vector<std::size_t>> DualGraph::connected_components(
    const ReducedDivisor& d) const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(n_, false);
  for (std::size_t start = 0; start < n_; ++start) {
    if (!d.contains(start) || seen[start]) continue;
    std::vector<std::size_t> component;
    std::vector<std::size_t> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      component.push_back(v);
      for (std::size_t w : adjacency_[v]) {
        if (d.contains(w) && !seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(component.begin(), component.end());
    out.push_back(std::move(component));
  }
  return out;
}

std::vector<std::size_t> DualGraph::tree_path(std::size_t from, std::size_t to) const {
  std::vector<std::size_t> parent(n_, n_);
  std::vector<std::size_t> queue{from};
  parent[from] = from;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t v = queue[head];
    for (std::size_t w : adjacency_[v]) {
      if (parent[w] == n_) {
        parent[w] = v;
        queue.push_back(w);
      }
    }
  }
  std::vector<std::size_t> path;
  for (std::size_t v = to; v != from; v = parent[v]) path.push_back(v);
  path.push_back(from);
  std::reverse(path.begin(), path.end());
  return path;
}

namespace {

std::string component_name(std::size_t j) { return "E" + std::to_string(j + 1); }

}  // namespace

DualGraph build_graph(const IntMatrix& m, std::vector<std::string> labels) {
  const std::size_t n = m.size();
  if (n == 0) throw Error(Errc::NotNegativeDefinite, "empty intersection matrix");
  for (const auto& row : m) {
    if (row.size() != n) throw Error(Errc::LengthMismatch, "intersection matrix is not square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (m[i][j] != m[j][i]) {
        throw Error(Errc::NotSymmetric, "entry (" + std::to_string(i + 1) + "," +
                                            std::to_string(j + 1) + ") differs from its transpose");
      }
      if (m[i][j] != 0 && m[i][j] != 1) {
        throw Error(Errc::BadOffDiagonal, "entry (" + std::to_string(i + 1) + "," +
                                              std::to_string(j + 1) + ") = " + m[i][j].get_str());
      }
    }
  }

  DualGraph g;
  g.n_ = n;
  g.m_.reserve(n * n);
  for (const auto& row : m) g.m_.insert(g.m_.end(), row.begin(), row.end());
  g.adjacency_.assign(n, {});
  std::size_t edge_count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && m[i][j] == 1) g.adjacency_[i].push_back(j);
    }
    edge_count += g.adjacency_[i].size();
  }
  edge_count /= 2;

  const auto everything = [n] {
    ReducedDivisor all(n);
    all.support.assign(n, true);
    return all;
  }();
  if (g.connected_components(everything).size() != 1) {
    throw Error(Errc::Disconnected, "dual graph is not connected");
  }
  if (edge_count != n - 1) {
    throw Error(Errc::NotTree, "dual graph has " + std::to_string(edge_count) + " edges for " +
                                   std::to_string(n) + " vertices");
  }

  const auto minors = linalg::leading_minors(m);
  for (std::size_t k = 0; k < n; ++k) {
    // Negative definite iff (-1)^(k+1) det_k > 0 for the k x k leading minor.
    const bool ok = (k % 2 == 0) ? minors[k] < 0 : minors[k] > 0;
    if (!ok) {
      throw Error(Errc::NotNegativeDefinite,
                  "leading minor of order " + std::to_string(k + 1) + " is " + minors[k].get_str());
    }
  }

  if (labels.empty()) {
    for (std::size_t j = 0; j < n; ++j) labels.push_back(component_name(j));
  } else if (labels.size() != n) {
    throw Error(Errc::LengthMismatch, "expected " + std::to_string(n) + " labels");
  }
  g.labels_ = std::move(labels);
  g.canonical_ = relative_canonical(g);
  g.fundamental_cycle_ = fundamental_cycle(g, 0);
  return g;
}

QDivisor relative_canonical(const DualGraph& g) {
  const std::size_t n = g.size();
  linalg::RatMatrix a(n, std::vector<Rational>(n));
  std::vector<Rational> b(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = g.entry(i, j);
    b[i] = Rational(-2) - Rational(g.self_intersection(i));
  }
  auto k = linalg::solve(std::move(a), std::move(b));
  if (!k) throw Error(Errc::NotNegativeDefinite, "intersection matrix is singular");
  return QDivisor(std::move(*k));
}

ZDivisor fundamental_cycle(const DualGraph& g, std::size_t start) {
  ZDivisor seed(g.size());
  seed[start] = 1;
  return antinef_closure(g, seed);
}

std::vector<Integer> derive_diagonal(std::size_t n, const std::vector<Edge>& edges,
                                     const QDivisor& canonical) {
  if (canonical.size() != n) throw Error(Errc::LengthMismatch, "canonical divisor length");
  std::vector<Rational> neighbor_sum(n, Rational(0));
  for (const auto& [a, b] : edges) {
    if (a >= n || b >= n) throw Error(Errc::LengthMismatch, "edge endpoint out of range");
    neighbor_sum[a] += canonical[b];
    neighbor_sum[b] += canonical[a];
  }
  std::vector<Integer> diagonal(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Rational denom = canonical[i] + 1;
    if (denom == 0) {
      throw Error(Errc::DivisionByZero, component_name(i) + " has k = -1");
    }
    const Rational value = -(Rational(2) + neighbor_sum[i]) / denom;
    if (!is_integral(value)) {
      throw Error(Errc::NonIntegralSelfIntersection,
                  component_name(i) + "^2 would be " + to_string(value));
    }
    diagonal[i] = value.get_num();
  }
  return diagonal;
}

IntMatrix assemble_matrix(std::size_t n, const std::vector<Edge>& edges,
                          const std::vector<Integer>& diagonal) {
  IntMatrix m(n, std::vector<Integer>(n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = diagonal.at(i);
  for (const auto& [a, b] : edges) {
    m.at(a).at(b) = 1;
    m.at(b).at(a) = 1;
  }
  return m;
}

SingularityClass singularity_class(const DualGraph& g) {
  bool touches = false;
  for (const auto& k : g.canonical().coeffs) {
    if (k < -1) return SingularityClass::Neither;
    if (k == -1) touches = true;
  }
  return touches ? SingularityClass::LogCanonicalOnly : SingularityClass::LogTerminal;
}

IdealTuple attach_ideals(std::shared_ptr<const DualGraph> g, std::vector<ZDivisor> divisors) {
  if (!g) throw Error(Errc::LengthMismatch, "no graph");
  if (divisors.empty()) throw Error(Errc::LengthMismatch, "empty ideal tuple");
  const std::size_t n = g->size();
  IdealTuple t;
  t.rho_.assign(divisors.size(), std::vector<Integer>(n));
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    const auto& f = divisors[i];
    const std::string name = "F" + std::to_string(i + 1);
    if (f.size() != n) {
      throw Error(Errc::LengthMismatch, name + " has " + std::to_string(f.size()) +
                                            " coefficients, graph has " + std::to_string(n));
    }
    if (f.is_zero()) throw Error(Errc::NotAntinef, name + " is zero (ideal is not m-primary)");
    for (std::size_t j = 0; j < n; ++j) {
      if (f[j] < 0) throw Error(Errc::NotAntinef, name + " has a negative coefficient at " +
                                                      component_name(j));
      t.rho_[i][j] = -g->dot(f, j);
      if (t.rho_[i][j] < 0) {
        throw Error(Errc::NotAntinef, "(" + std::to_string(i + 1) + ", " + std::to_string(j + 1) +
                                          "): " + name + "." + component_name(j) + " = " +
                                          Integer(-t.rho_[i][j]).get_str() + " > 0");
      }
    }
  }
  t.dicritical_.assign(n, false);
  t.rupture_.assign(n, false);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      if (t.rho_[i][j] > 0) t.dicritical_[j] = true;
    }
    t.rupture_[j] = g->valence(j) >= 3;
  }
  t.graph_ = std::move(g);
  t.divisors_ = std::move(divisors);
  return t;
}

}  // namespace mmi
