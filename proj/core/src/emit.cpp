#include "mmi/emit.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace mmi {

namespace {

std::string coeffs_csv(const ZDivisor& d) {
  std::string out;
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (j) out += ';';
    out += to_string(d[j]);
  }
  return out;
}

std::string support_csv(const ReducedDivisor& d, const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t j : d.components()) {
    if (!out.empty()) out += ';';
    out += labels[j];
  }
  return out;
}

std::string walls_csv(const std::vector<WallMembership>& walls, const std::vector<std::string>& labels) {
  std::string out;
  for (const auto& w : walls) {
    if (!out.empty()) out += ';';
    out += labels[w.component] + ":" + to_string(w.level);
  }
  return out;
}

std::string members_csv(const ArrangementLine& line, const std::vector<std::string>& labels) {
  std::string out;
  for (const auto& w : line.members) {
    if (!out.empty()) out += ';';
    out += labels[w.j] + ":" + to_string(w.level);
  }
  return out;
}

}  // namespace

std::string walk_csv(const IdealTuple& t, const std::vector<RayPoint>& walk) {
  const auto& labels = t.graph().labels();
  std::ostringstream out;
  out << "mu,point,D,D_left,H,G,m,walls\n";
  for (const auto& p : walk) {
    const auto& r = p.record;
    out << to_string(p.mu) << ',' << format_point_csv(r.point) << ',' << coeffs_csv(r.D) << ','
        << coeffs_csv(r.D_left) << ',' << support_csv(r.H, labels) << ','
        << (r.G ? support_csv(*r.G, labels) : std::string()) << ',' << to_string(r.mult) << ','
        << walls_csv(r.wall_lines, labels) << '\n';
  }
  return out.str();
}

std::string atlas_cells_csv(const WallAtlas& atlas) {
  std::ostringstream out;
  out << "face,region,representative,D,polygon\n";
  for (std::size_t f = 0; f < atlas.faces.size(); ++f) {
    const auto& face = atlas.faces[f];
    out << f << ',' << face.region << ',' << format_point_csv(face.representative) << ','
        << coeffs_csv(face.D) << ',';
    for (std::size_t i = 0; i < face.polygon.size(); ++i) {
      if (i) out << ';';
      out << format_point_csv(face.polygon[i], ' ');
    }
    out << '\n';
  }
  return out.str();
}

std::string atlas_facets_csv(const IdealTuple& t, const WallAtlas& atlas) {
  const auto& labels = t.graph().labels();
  std::ostringstream out;
  out << "facet,line,walls,from,to,D_lower,D_upper,sample,m,G\n";
  for (std::size_t f = 0; f < atlas.facets.size(); ++f) {
    const auto& facet = atlas.facets[f];
    const auto& line = atlas.lines[facet.line];
    for (std::size_t s = 0; s < facet.samples.size(); ++s) {
      out << f << ',' << format_line(line) << ',' << members_csv(line, labels) << ','
          << format_point_csv(facet.from) << ',' << format_point_csv(facet.to) << ','
          << coeffs_csv(facet.D_lower) << ',' << coeffs_csv(facet.D_upper) << ','
          << format_point_csv(facet.samples[s]) << ',' << to_string(facet.sample_mult[s]) << ','
          << support_csv(facet.sample_G[s], labels) << '\n';
    }
  }
  return out.str();
}

std::string atlas_vertices_csv(const IdealTuple& t, const WallAtlas& atlas) {
  const auto& labels = t.graph().labels();
  std::ostringstream out;
  out << "vertex,point,lines,D,m\n";
  for (std::size_t v = 0; v < atlas.vertices.size(); ++v) {
    const auto& vx = atlas.vertices[v];
    out << v << ',' << format_point_csv(vx.point) << ',';
    for (std::size_t i = 0; i < vx.lines.size(); ++i) {
      if (i) out << ';';
      out << members_csv(atlas.lines[vx.lines[i]], labels);
    }
    out << ',' << coeffs_csv(vx.D) << ',' << to_string(vx.mult) << '\n';
  }
  return out.str();
}

std::string atlas_svg(const IdealTuple& t, const WallAtlas& atlas) {
  constexpr long kWidth = 600;
  constexpr long kPad = 40;
  const Rational& bx = atlas.box.x;
  const Rational& by = atlas.box.y;
  const Rational height = Rational(kWidth) * by / bx;
  auto px = [&](const Rational& x) { return to_decimal(Rational(kPad) + Rational(kWidth) * x / bx); };
  auto py = [&](const Rational& y) { return to_decimal(Rational(kPad) + height - height * y / by); };

  static constexpr std::array<const char*, 12> kPalette = {
      "#e8f1fa", "#fdebd3", "#e3f4e1", "#f6e1ef", "#fff6cc", "#e4e4f7",
      "#d9f0ee", "#f9e0dc", "#eef3d6", "#ece2d8", "#dfeaf7", "#f3e6fb"};
  std::vector<ZDivisor> divisors;
  for (const auto& r : atlas.regions) divisors.push_back(r.D);
  std::sort(divisors.begin(), divisors.end(), lex_less);
  divisors.erase(std::unique(divisors.begin(), divisors.end()), divisors.end());
  auto color = [&](const ZDivisor& d) {
    const auto it = std::lower_bound(divisors.begin(), divisors.end(), d, lex_less);
    return kPalette[static_cast<std::size_t>(it - divisors.begin()) % kPalette.size()];
  };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << to_decimal(Rational(kWidth + 2 * kPad))
      << "\" height=\"" << to_decimal(height + Rational(2 * kPad)) << "\">\n";
  out << "<g stroke=\"none\">\n";
  for (const auto& face : atlas.faces) {
    out << "<polygon fill=\"" << color(face.D) << "\" points=\"";
    for (std::size_t i = 0; i < face.polygon.size(); ++i) {
      if (i) out << ' ';
      out << px(face.polygon[i][0]) << ',' << py(face.polygon[i][1]);
    }
    out << "\"/>\n";
  }
  out << "</g>\n";

  const auto lc = lc_wall_facets(t, atlas);
  out << "<g stroke-linecap=\"round\">\n";
  for (std::size_t f = 0; f < atlas.facets.size(); ++f) {
    const auto& facet = atlas.facets[f];
    const bool on_lc = std::find(lc.begin(), lc.end(), f) != lc.end();
    out << "<line x1=\"" << px(facet.from[0]) << "\" y1=\"" << py(facet.from[1]) << "\" x2=\""
        << px(facet.to[0]) << "\" y2=\"" << py(facet.to[1]) << "\" stroke=\""
        << (on_lc ? "#c0392b" : "#222222") << "\" stroke-width=\"" << (on_lc ? "2.5" : "1") << "\"/>\n";
  }
  out << "</g>\n";

  out << "<rect x=\"" << px(0) << "\" y=\"" << py(by) << "\" width=\"" << to_decimal(Rational(kWidth))
      << "\" height=\"" << to_decimal(height) << "\" fill=\"none\" stroke=\"#000000\"/>\n";
  const Rational l1 = lct_axis(t, 0);
  const Rational l2 = lct_axis(t, 1);
  if (l1 <= bx) {
    out << "<line x1=\"" << px(l1) << "\" y1=\"" << py(0) << "\" x2=\"" << px(l1) << "\" y2=\""
        << to_decimal(Rational(kPad) + height + 6) << "\" stroke=\"#000000\"/>\n";
    out << "<text x=\"" << px(l1) << "\" y=\"" << to_decimal(Rational(kPad) + height + 20)
        << "\" font-size=\"12\" text-anchor=\"middle\">" << to_string(l1) << "</text>\n";
  }
  if (l2 <= by) {
    out << "<line x1=\"" << to_decimal(Rational(kPad - 6)) << "\" y1=\"" << py(l2) << "\" x2=\"" << px(0)
        << "\" y2=\"" << py(l2) << "\" stroke=\"#000000\"/>\n";
    out << "<text x=\"" << to_decimal(Rational(kPad - 8)) << "\" y=\"" << py(l2)
        << "\" font-size=\"12\" text-anchor=\"end\">" << to_string(l2) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace mmi
