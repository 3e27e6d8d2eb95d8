#include "mmi/wall_atlas.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <tuple>

#include "mmi/error.hpp"

namespace mmi {

WallLine make_wall_line(const IdealTuple& t, std::size_t j, const Integer& level) {
  WallLine w{j, level, std::vector<Integer>(t.r()), Rational(level) + t.graph().canonical()[j]};
  for (std::size_t i = 0; i < t.r(); ++i) w.normal[i] = t.e(i, j);
  return w;
}

std::string format_line(const ArrangementLine& line) {
  std::string out;
  for (std::size_t i = 0; i < line.normal.size(); ++i) {
    if (i) out += "+";
    out += to_string(line.normal[i]) + "z" + std::to_string(i + 1);
  }
  return out + "=" + to_string(line.rhs);
}

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Bijection: return "Bijection";
    case Verdict::DegenerateProportional: return "DegenerateProportional";
    case Verdict::MultiplicityHypothesisFails: return "MultiplicityHypothesisFails";
    case Verdict::Mismatch: return "Mismatch";
  }
  return "?";
}

HalfPlaneSet lc_region(const IdealTuple& t) { return region(t, Point::origin(t.r())); }

Rational lct_axis(const IdealTuple& t, std::size_t i) {
  const auto d0 = mmi_divisor(t, Point::origin(t.r()));
  const auto& k = t.graph().canonical();
  std::optional<Rational> best;
  for (std::size_t j = 0; j < t.n(); ++j) {
    if (t.e(i, j) == 0) continue;
    const Rational v = (k[j] + 1 + Rational(d0[j])) / Rational(t.e(i, j));
    if (!best || v < *best) best = v;
  }
  if (!best) throw Error(Errc::NotAntinef, "ideal " + std::to_string(i + 1) + " is zero");
  return *best;
}

namespace {

Rational dot(const std::vector<Integer>& a, const std::vector<Rational>& z) {
  Rational s = 0;
  for (std::size_t i = 0; i < z.size(); ++i) s += Rational(a[i]) * z[i];
  return s;
}

Point axis_point(const IdealTuple& t, std::size_t i) {
  std::vector<Rational> z(t.r(), Rational(0));
  z[i] = lct_axis(t, i);
  return Point(std::move(z));
}

Point centroid(const std::vector<Point>& pts) {
  std::vector<Rational> c(pts.front().size(), Rational(0));
  for (const auto& p : pts) {
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += p[i];
  }
  for (auto& x : c) x /= Rational(static_cast<long>(pts.size()));
  return Point(std::move(c));
}

ReducedDivisor gprime_from(const IdealTuple& t, const RegionAnalysis& lc, const Point& z) {
  ReducedDivisor g(t.n());
  for (const auto& f : lc.facets) {
    if (dot(f.normal, z.coords) != f.rhs) continue;
    for (std::size_t j : f.components) g.support[j] = true;
  }
  return g;
}

std::vector<std::size_t> nest_from(const IdealTuple& t, const std::vector<ReducedDivisor>& gp) {
  std::set<std::size_t> ends;
  for (const auto& g : gp) {
    for (std::size_t j : g.components()) ends.insert(j);
  }
  std::set<std::size_t> tree(ends.begin(), ends.end());
  for (auto a = ends.begin(); a != ends.end(); ++a) {
    for (auto b = std::next(a); b != ends.end(); ++b) {
      for (std::size_t j : t.graph().tree_path(*a, *b)) tree.insert(j);
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t j : tree) {
    if (t.rupture_or_dicritical(j)) out.push_back(j);
  }
  return out;
}

}  // namespace

ReducedDivisor axis_Gprime(const IdealTuple& t, std::size_t i) {
  const auto lc = analyze_region(t, lc_region(t));
  return gprime_from(t, lc, axis_point(t, i));
}

std::vector<std::size_t> newton_nest(const IdealTuple& t) {
  const auto lc = analyze_region(t, lc_region(t));
  std::vector<ReducedDivisor> gp;
  for (std::size_t i = 0; i < t.r(); ++i) gp.push_back(gprime_from(t, lc, axis_point(t, i)));
  return nest_from(t, gp);
}

NestReport bijection_report(const IdealTuple& t) {
  NestReport rep;
  const auto lc = analyze_region(t, lc_region(t));
  for (std::size_t i = 0; i < t.r(); ++i) {
    rep.lct.push_back(lct_axis(t, i));
    rep.Gprime.push_back(gprime_from(t, lc, axis_point(t, i)));
  }
  rep.nest = nest_from(t, rep.Gprime);

  auto record_failure = [&](const Point& p, const Integer& m) {
    if (m == 1) return;
    for (const auto& f : rep.failures) {
      if (f.first == p) return;
    }
    rep.failures.emplace_back(p, m);
  };
  for (const auto& f : lc.facets) {
    LcFacetReport fr{f, centroid(f.vertices), 0, ReducedDivisor(t.n())};
    fr.mult = multiplicity(t, fr.sample);
    if (fr.mult > 0) fr.G = minimal_jumping_divisor(t, fr.sample);
    record_failure(fr.sample, fr.mult);
    rep.lc_facets.push_back(std::move(fr));
  }
  // Where two facets meet: shared vertices and the centroid of the shared face.
  for (std::size_t a = 0; a < lc.facets.size(); ++a) {
    for (std::size_t b = a + 1; b < lc.facets.size(); ++b) {
      std::vector<Point> shared;
      for (const auto& p : lc.facets[a].vertices) {
        const auto& vb = lc.facets[b].vertices;
        if (std::find(vb.begin(), vb.end(), p) != vb.end()) shared.push_back(p);
      }
      for (const auto& p : shared) record_failure(p, multiplicity(t, p));
      if (shared.size() > 1) {
        const Point c = centroid(shared);
        record_failure(c, multiplicity(t, c));
      }
    }
  }

  if (!rep.failures.empty()) {
    rep.verdict = Verdict::MultiplicityHypothesisFails;
    return rep;
  }
  const auto& k = t.graph().canonical();
  if (lc.facets.size() == 1 && rep.nest.size() == 2) {
    const std::size_t j = rep.nest[0];
    const std::size_t l = rep.nest[1];
    const auto d0 = mmi_divisor(t, Point::origin(t.r()));
    const Rational target = (k[l] + 1 + Rational(d0[l])) / (k[j] + 1 + Rational(d0[j]));
    bool proportional = true;
    for (std::size_t i = 0; i < t.r(); ++i) {
      if (t.e(i, j) == 0) {
        proportional = false;
        break;
      }
      const Rational q = Rational(t.e(i, l)) / Rational(t.e(i, j));
      rep.ratios.push_back(q);
      if (q != target) proportional = false;
    }
    if (proportional) {
      rep.verdict = Verdict::DegenerateProportional;
      return rep;
    }
    rep.ratios.clear();
  }
  if (lc.facets.size() == rep.nest.size()) {
    std::set<std::size_t> used;
    bool ok = true;
    for (const auto& f : lc.facets) {
      std::vector<std::size_t> hit;
      for (std::size_t j : f.components) {
        if (std::find(rep.nest.begin(), rep.nest.end(), j) != rep.nest.end()) hit.push_back(j);
      }
      if (hit.size() != 1 || !used.insert(hit[0]).second) ok = false;
    }
    rep.verdict = ok ? Verdict::Bijection : Verdict::Mismatch;
  } else {
    rep.verdict = Verdict::Mismatch;
  }
  return rep;
}

namespace {

constexpr long kBottom = -1;
constexpr long kTop = -2;

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

class Arrangement {
 public:
  Arrangement(const IdealTuple& t, const Box& box) : t_(t), box_(box) {}

  WallAtlas build();

 private:
  Rational y_at(long boundary, const Rational& x) const {
    if (boundary == kBottom) return 0;
    if (boundary == kTop) return box_.y;
    const auto& l = atlas_.lines[static_cast<std::size_t>(boundary)];
    return (l.rhs - Rational(l.normal[0]) * x) / Rational(l.normal[1]);
  }
  long boundary(std::size_t s, std::size_t b) const {
    if (b == 0) return kBottom;
    if (b == order_[s].size() + 1) return kTop;
    return static_cast<long>(order_[s][b - 1]);
  }
  std::size_t face_of(std::size_t s, std::size_t trap) { return face_index_[uf_->find(base_[s] + trap)]; }

  void collect_lines();
  void collect_vertices();
  void sweep();
  void build_faces();
  void build_edges();
  void build_regions();

  const IdealTuple& t_;
  Box box_;
  WallAtlas atlas_;
  std::vector<Rational> lo_, hi_;  // x-range of each line in the box
  std::map<std::vector<Rational>, std::set<std::size_t>> vertex_lines_;
  std::vector<Rational> xs_;
  std::vector<std::vector<std::size_t>> order_;  // active lines per slab, bottom to top
  std::vector<std::size_t> base_;
  std::unique_ptr<UnionFind> uf_;
  std::vector<std::size_t> face_index_;
};

void Arrangement::collect_lines() {
  const auto& k = t_.graph().canonical();
  std::map<std::pair<std::vector<Integer>, Rational>, std::size_t> index;
  for (std::size_t j = 0; j < t_.n(); ++j) {
    const Integer a = t_.e(0, j);
    const Integer b = t_.e(1, j);
    if (a <= 0 || b <= 0) throw Error(Errc::Unsupported, "wall normal with a zero entry");
    const Rational corner = Rational(a) * box_.x + Rational(b) * box_.y;
    const Integer top = ceil_of(corner - k[j]);
    for (Integer level = 1; level <= top; ++level) {
      const WallLine w = make_wall_line(t_, j, level);
      if (w.rhs <= 0 || w.rhs >= corner) continue;
      Integer g;
      mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      std::vector<Integer> normal{a / g, b / g};
      const Rational rhs = w.rhs / Rational(g);
      auto key = std::make_pair(normal, rhs);
      auto [it, fresh] = index.emplace(key, atlas_.lines.size());
      if (fresh) atlas_.lines.push_back({normal, rhs, {}});
      atlas_.lines[it->second].members.push_back(w);
    }
  }
  if (atlas_.lines.empty()) throw Error(Errc::BoxTooSmall, "no wall line meets the box");
  // Deterministic order by normal, then rhs.
  std::sort(atlas_.lines.begin(), atlas_.lines.end(), [](const auto& p, const auto& q) {
    return std::tie(p.normal, p.rhs) < std::tie(q.normal, q.rhs);
  });
  for (const auto& l : atlas_.lines) {
    const Rational a(l.normal[0]);
    const Rational b(l.normal[1]);
    lo_.push_back(std::max(Rational(0), Rational((l.rhs - b * box_.y) / a)));
    hi_.push_back(std::min(box_.x, Rational(l.rhs / a)));
  }
}

void Arrangement::collect_vertices() {
  std::set<Rational> xs{Rational(0), box_.x};
  for (std::size_t p = 0; p < atlas_.lines.size(); ++p) {
    xs.insert(lo_[p]);
    xs.insert(hi_[p]);
    const auto& lp = atlas_.lines[p];
    for (std::size_t q = p + 1; q < atlas_.lines.size(); ++q) {
      const auto& lq = atlas_.lines[q];
      const Integer det = lp.normal[0] * lq.normal[1] - lq.normal[0] * lp.normal[1];
      if (det == 0) continue;
      const Rational x = (lp.rhs * Rational(lq.normal[1]) - lq.rhs * Rational(lp.normal[1])) / Rational(det);
      const Rational y = (Rational(lp.normal[0]) * lq.rhs - Rational(lq.normal[0]) * lp.rhs) / Rational(det);
      if (x < 0 || x > box_.x || y < 0 || y > box_.y) continue;
      auto& s = vertex_lines_[{x, y}];
      s.insert(p);
      s.insert(q);
      xs.insert(x);
    }
  }
  xs_.assign(xs.begin(), xs.end());
}

void Arrangement::sweep() {
  const std::size_t slabs = xs_.size() - 1;
  order_.resize(slabs);
  base_.resize(slabs + 1);
  base_[0] = 0;
  for (std::size_t s = 0; s < slabs; ++s) {
    const Rational mid = (xs_[s] + xs_[s + 1]) / 2;
    std::vector<std::pair<Rational, std::size_t>> active;
    for (std::size_t p = 0; p < atlas_.lines.size(); ++p) {
      if (lo_[p] <= xs_[s] && hi_[p] >= xs_[s + 1]) active.emplace_back(y_at(static_cast<long>(p), mid), p);
    }
    std::sort(active.begin(), active.end());
    for (auto& [y, p] : active) order_[s].push_back(p);
    base_[s + 1] = base_[s] + order_[s].size() + 1;
  }
  uf_ = std::make_unique<UnionFind>(base_[slabs]);
  // Trapezoids of neighbouring slabs sharing a vertical segment of positive
  // length belong to the same face.
  for (std::size_t s = 0; s + 1 < slabs; ++s) {
    const Rational& x = xs_[s + 1];
    const std::size_t nl = order_[s].size() + 1;
    const std::size_t nr = order_[s + 1].size() + 1;
    std::size_t a = 0;
    std::size_t b = 0;
    while (a < nl && b < nr) {
      const Rational lo = std::max(y_at(boundary(s, a), x), y_at(boundary(s + 1, b), x));
      const Rational ha = y_at(boundary(s, a + 1), x);
      const Rational hb = y_at(boundary(s + 1, b + 1), x);
      if (lo < std::min(ha, hb)) uf_->unite(base_[s] + a, base_[s + 1] + b);
      if (ha < hb) {
        ++a;
      } else if (hb < ha) {
        ++b;
      } else {
        ++a;
        ++b;
      }
    }
  }
}

void Arrangement::build_faces() {
  const std::size_t slabs = order_.size();
  face_index_.assign(base_[slabs], SIZE_MAX);
  // Per face: the trapezoid of each slab it meets, as (slab, lower, upper).
  struct Piece {
    std::size_t slab;
    long lower;
    long upper;
  };
  std::vector<std::vector<Piece>> pieces;
  for (std::size_t s = 0; s < slabs; ++s) {
    for (std::size_t b = 0; b <= order_[s].size(); ++b) {
      const std::size_t root = uf_->find(base_[s] + b);
      if (face_index_[root] == SIZE_MAX) {
        face_index_[root] = pieces.size();
        pieces.emplace_back();
      }
      pieces[face_index_[root]].push_back({s, boundary(s, b), boundary(s, b + 1)});
    }
  }
  for (const auto& ps : pieces) {
    std::vector<std::vector<Rational>> bottom;
    std::vector<std::vector<Rational>> top;
    auto push = [](std::vector<std::vector<Rational>>& chain, std::vector<Rational> p) {
      if (chain.empty() || chain.back() != p) chain.push_back(std::move(p));
    };
    for (std::size_t i = 0; i < ps.size(); ++i) {
      const auto& pc = ps[i];
      const Rational& x = xs_[pc.slab];
      if (i == 0 || ps[i - 1].lower != pc.lower) push(bottom, {x, y_at(pc.lower, x)});
      if (i == 0 || ps[i - 1].upper != pc.upper) push(top, {x, y_at(pc.upper, x)});
    }
    const auto& last = ps.back();
    const Rational& xr = xs_[last.slab + 1];
    push(bottom, {xr, y_at(last.lower, xr)});
    push(top, {xr, y_at(last.upper, xr)});
    std::vector<std::vector<Rational>> poly = bottom;
    for (auto it = top.rbegin(); it != top.rend(); ++it) {
      if (poly.back() != *it) poly.push_back(*it);
    }
    if (poly.size() > 1 && poly.front() == poly.back()) poly.pop_back();
    AtlasFace f;
    for (auto& p : poly) f.polygon.emplace_back(std::move(p));
    f.representative = centroid(f.polygon);
    f.D = mmi_divisor(t_, f.representative);
    atlas_.faces.push_back(std::move(f));
  }
}

void Arrangement::build_edges() {
  std::vector<std::set<std::vector<Rational>>> on_line(atlas_.lines.size());
  for (const auto& [pt, ls] : vertex_lines_) {
    for (std::size_t p : ls) on_line[p].insert(pt);
  }
  for (std::size_t p = 0; p < atlas_.lines.size(); ++p) {
    on_line[p].insert({lo_[p], y_at(static_cast<long>(p), lo_[p])});
    on_line[p].insert({hi_[p], y_at(static_cast<long>(p), hi_[p])});
    // std::set orders by x first; all lines have negative slope.
    std::vector<std::vector<Rational>> pts(on_line[p].begin(), on_line[p].end());
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      const std::size_t s = static_cast<std::size_t>(
          std::lower_bound(xs_.begin(), xs_.end(), pts[i][0]) - xs_.begin());
      const auto& ord = order_[s];
      const auto pos = static_cast<std::size_t>(std::find(ord.begin(), ord.end(), p) - ord.begin());
      if (pos == ord.size()) throw Error(Errc::InternalConsistency, "edge outside its slab");
      AtlasEdge e{p, Point(pts[i]), Point(pts[i + 1]), face_of(s, pos), face_of(s, pos + 1), false};
      const auto& d_lower = atlas_.faces[e.below].D;
      const auto& d_upper = atlas_.faces[e.above].D;
      e.jumping = d_lower != d_upper;
      const Point mid = centroid({e.from, e.to});
      if (mmi_divisor(t_, mid) != d_upper) {
        throw Error(Errc::InternalConsistency, "edge divisor differs from its upper side at " +
                                                   format_point(mid));
      }
      atlas_.edges.push_back(std::move(e));
    }
  }
  for (const auto& [pt, ls] : vertex_lines_) {
    AtlasVertex v{Point(pt), std::vector<std::size_t>(ls.begin(), ls.end()), {}, 0};
    v.D = mmi_divisor(t_, v.point);
    v.mult = multiplicity(t_, v.point);
    atlas_.vertices.push_back(std::move(v));
  }
}

void Arrangement::build_regions() {
  UnionFind uf(atlas_.faces.size());
  for (const auto& e : atlas_.edges) {
    if (!e.jumping) uf.unite(e.below, e.above);
  }
  std::vector<std::size_t> index(atlas_.faces.size(), SIZE_MAX);
  for (std::size_t f = 0; f < atlas_.faces.size(); ++f) {
    const std::size_t root = uf.find(f);
    if (index[root] == SIZE_MAX) {
      index[root] = atlas_.regions.size();
      atlas_.regions.push_back({atlas_.faces[f].D, {}});
    }
    atlas_.faces[f].region = index[root];
    atlas_.regions[index[root]].faces.push_back(f);
  }
}

WallAtlas Arrangement::build() {
  atlas_.box = box_;
  collect_lines();
  collect_vertices();
  sweep();
  build_faces();
  build_edges();
  build_regions();
  atlas_.facets = c_facets(t_, atlas_);
  return std::move(atlas_);
}

}  // namespace

WallAtlas cell_decomposition(const IdealTuple& t, const Box& box) {
  if (t.r() != 2) throw Error(Errc::Unsupported, "atlases need exactly two ideals");
  if (box.x <= 0 || box.y <= 0) throw Error(Errc::BoxTooSmall, "box bounds must be positive");
  return Arrangement(t, box).build();
}

std::vector<CFacet> c_facets(const IdealTuple& t, const WallAtlas& atlas) {
  std::vector<std::vector<Point>> line_vertices(atlas.lines.size());
  for (const auto& v : atlas.vertices) {
    for (std::size_t p : v.lines) line_vertices[p].push_back(v.point);
  }
  std::vector<CFacet> out;
  auto close = [&](CFacet f) {
    // Interior samples avoiding every vertex of the line.
    const auto& avoid = line_vertices[f.line];
    for (long den = 3; f.samples.size() < 2; ++den) {
      for (long num = 1; num < den && f.samples.size() < 2; ++num) {
        if (std::gcd(num, den) != 1) continue;
        const Rational s(num, den);
        Point p({f.from[0] + s * (f.to[0] - f.from[0]), f.from[1] + s * (f.to[1] - f.from[1])});
        if (std::find(avoid.begin(), avoid.end(), p) != avoid.end()) continue;
        if (std::find(f.samples.begin(), f.samples.end(), p) != f.samples.end()) continue;
        f.samples.push_back(std::move(p));
      }
    }
    for (const auto& p : f.samples) {
      f.sample_mult.push_back(multiplicity(t, p));
      f.sample_G.push_back(f.sample_mult.back() > 0 ? minimal_jumping_divisor(t, p)
                                                   : ReducedDivisor(t.n()));
    }
    out.push_back(std::move(f));
  };
  std::optional<CFacet> open;
  for (std::size_t i = 0; i < atlas.edges.size(); ++i) {
    const auto& e = atlas.edges[i];
    const auto& lower = atlas.faces[e.below].D;
    const auto& upper = atlas.faces[e.above].D;
    const bool extends = open && e.jumping && open->line == e.line && open->to == e.from &&
                         open->D_lower == lower && open->D_upper == upper;
    if (extends) {
      open->to = e.to;
      open->edges.push_back(i);
      continue;
    }
    if (open) close(std::move(*open));
    open.reset();
    if (e.jumping) open = CFacet{e.line, e.from, e.to, {i}, lower, upper, {}, {}, {}};
  }
  if (open) close(std::move(*open));
  return out;
}

std::vector<std::size_t> lc_wall_facets(const IdealTuple& t, const WallAtlas& atlas) {
  const auto d0 = mmi_divisor(t, Point::origin(t.r()));
  std::vector<std::size_t> out;
  for (std::size_t f = 0; f < atlas.facets.size(); ++f) {
    if (atlas.facets[f].D_lower == d0) out.push_back(f);
  }
  return out;
}

std::vector<std::size_t> facet_intersection_vertices(const WallAtlas& atlas) {
  std::vector<std::vector<std::size_t>> by_line(atlas.lines.size());
  for (std::size_t f = 0; f < atlas.facets.size(); ++f) by_line[atlas.facets[f].line].push_back(f);
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < atlas.vertices.size(); ++v) {
    const auto& x = atlas.vertices[v].point[0];
    std::size_t lines_hit = 0;
    for (std::size_t p : atlas.vertices[v].lines) {
      for (std::size_t f : by_line[p]) {
        if (atlas.facets[f].from[0] <= x && x <= atlas.facets[f].to[0]) {
          ++lines_hit;
          break;
        }
      }
    }
    if (lines_hit >= 2) out.push_back(v);
  }
  return out;
}

}  // namespace mmi
