#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "mmi/emit.hpp"
#include "mmi/error.hpp"
#include "mmi/fixture.hpp"
#include "mmi/lattice.hpp"
#include "mmi/ray_series.hpp"
#include "mmi/wall_atlas.hpp"

namespace mmi::cli {

namespace {

std::string join_labels(const std::vector<std::size_t>& comps, const std::vector<std::string>& labels) {
  if (comps.empty()) return "-";
  std::string out;
  for (std::size_t j : comps) {
    if (!out.empty()) out += ',';
    out += labels[j];
  }
  return out;
}

std::string join(const std::vector<Rational>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += to_string(v[i]);
  }
  return out;
}

std::vector<Integer> parse_integers(const std::string& text) {
  std::vector<Integer> out;
  for (const auto& q : parse_rational_list(text)) {
    if (!is_integral(q)) throw Error(Errc::RationalFormatError, "\"" + text + "\": expected integers");
    out.push_back(q.get_num());
  }
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(Errc::Usage, "cannot write " + path);
  f << content;
}

std::string walls_text(const std::vector<WallMembership>& walls, const std::vector<std::string>& labels) {
  if (walls.empty()) return "-";
  std::string out;
  for (const auto& w : walls) {
    if (!out.empty()) out += ',';
    out += labels[w.component] + ":" + to_string(w.level);
  }
  return out;
}

Ray make_ray(const std::string& base, const std::string& dir) {
  return Ray(parse_point(base), parse_integers(dir));
}

int cmd_validate(const Fixture& f, std::ostream& out) {
  const auto t = build_tuple(f);
  const auto& g = t.graph();
  out << "fixture " << f.name << "\n";
  out << "components " << t.n() << "\n";
  out << "ideals " << t.r() << "\n";
  out << "singularity " << to_string(singularity_class(g)) << "\n";
  std::vector<std::size_t> dic;
  std::vector<std::size_t> rup;
  for (std::size_t j = 0; j < t.n(); ++j) {
    if (t.dicritical(j)) dic.push_back(j);
    if (t.rupture(j)) rup.push_back(j);
  }
  out << "dicritical " << join_labels(dic, g.labels()) << "\n";
  out << "rupture " << join_labels(rup, g.labels()) << "\n";
  const auto lc = analyze_region(t, lc_region(t));
  if (!lc.valid()) {
    out << "BindingNonRuptureConstraint " << join_labels(lc.violations, g.labels()) << "\n";
    return 2;
  }
  out << "ok\n";
  return 0;
}

int cmd_point(const Fixture& f, const std::string& c_text, std::ostream& out) {
  const auto t = build_tuple(f);
  const auto& labels = t.graph().labels();
  const Point c = parse_point(c_text);
  const auto rec = jump_record(t, c);
  out << "point " << format_point(c) << "\n";
  out << "D = " << format_coeffs(rec.D) << "\n";
  out << "D_left = " << format_coeffs(rec.D_left) << "\n";
  out << "H = " << format_support(rec.H, labels) << "\n";
  out << "walls = " << walls_text(rec.wall_lines, labels) << "\n";
  out << "m = " << to_string(rec.mult) << "\n";
  const Integer frac = multiplicity_fractional(t, c);
  const Integer oracle = multiplicity_oracle(t, c);
  out << "m (fractional) = " << to_string(frac) << "\n";
  out << "m (colength) = " << to_string(oracle) << "\n";
  if (rec.G) {
    out << "G = " << format_support(*rec.G, labels) << "\n";
    out << "m (via G) = " << to_string(multiplicity_via_G(t, c)) << "\n";
  }
  if (frac != rec.mult || oracle != rec.mult) {
    throw Error(Errc::InternalConsistency, "multiplicity routes disagree");
  }
  return 0;
}

int cmd_ray(const Fixture& f, const std::string& base, const std::string& dir, const std::string& until,
            const std::string& csv, std::ostream& out) {
  const auto t = build_tuple(f);
  const auto& labels = t.graph().labels();
  const auto walk = ray_walk(t, make_ray(base, dir), parse_rational(until));
  for (const auto& p : walk) {
    out << "mu=" << to_string(p.mu) << " point=" << format_point(p.record.point)
        << " m=" << to_string(p.record.mult) << " H=" << format_support(p.record.H, labels)
        << " G=" << format_support(*p.record.G, labels)
        << " walls=" << walls_text(p.record.wall_lines, labels) << "\n";
  }
  out << "jumping points " << walk.size() << "\n";
  if (!csv.empty()) write_file(csv, walk_csv(t, walk));
  return 0;
}

int cmd_poincare(const Fixture& f, const std::string& base, const std::string& dir,
                 const std::string& horizon, std::ostream& out) {
  const auto t = build_tuple(f);
  out << format_series(poincare(t, make_ray(base, dir), parse_rational(horizon)));
  return 0;
}

std::string csv_sibling(const std::string& path, const std::string& kind) {
  const auto dot = path.rfind('.');
  const auto slash = path.find_last_of('/');
  const bool has_ext = dot != std::string::npos && (slash == std::string::npos || dot > slash);
  return (has_ext ? path.substr(0, dot) : path) + "." + kind + ".csv";
}

int cmd_walls(const Fixture& f, const std::string& box_text, const std::string& svg, const std::string& csv,
              std::ostream& out) {
  const auto t = build_tuple(f);
  const auto& labels = t.graph().labels();
  const auto b = parse_rational_list(box_text);
  if (b.size() != 2) throw Error(Errc::Usage, "--box expects two rationals");
  const auto atlas = cell_decomposition(t, Box{b[0], b[1]});
  out << "lines " << atlas.lines.size() << "\n";
  out << "vertices " << atlas.vertices.size() << "\n";
  out << "faces " << atlas.faces.size() << "\n";
  out << "regions " << atlas.regions.size() << "\n";
  out << "facets " << atlas.facets.size() << "\n";
  for (std::size_t idx : lc_wall_facets(t, atlas)) {
    const auto& fc = atlas.facets[idx];
    out << "lc facet " << format_line(atlas.lines[fc.line]) << " from " << format_point(fc.from) << " to "
        << format_point(fc.to) << " m=" << to_string(fc.sample_mult[0])
        << " G=" << format_support(fc.sample_G[0], labels) << "\n";
  }
  if (!svg.empty()) write_file(svg, atlas_svg(t, atlas));
  if (!csv.empty()) {
    write_file(csv_sibling(csv, "cells"), atlas_cells_csv(atlas));
    write_file(csv_sibling(csv, "facets"), atlas_facets_csv(t, atlas));
    write_file(csv_sibling(csv, "vertices"), atlas_vertices_csv(t, atlas));
  }
  return 0;
}

int cmd_lct(const Fixture& f, std::ostream& out) {
  const auto t = build_tuple(f);
  for (std::size_t i = 0; i < t.r(); ++i) {
    out << "lct" << i + 1 << " = " << to_string(lct_axis(t, i)) << "  G' = "
        << format_support(axis_Gprime(t, i), t.graph().labels()) << "\n";
  }
  return 0;
}

int cmd_nest(const Fixture& f, std::ostream& out) {
  const auto t = build_tuple(f);
  out << join_labels(newton_nest(t), t.graph().labels()) << "\n";
  return 0;
}

int cmd_bijection(const Fixture& f, std::ostream& out) {
  const auto t = build_tuple(f);
  const auto& labels = t.graph().labels();
  const auto rep = bijection_report(t);
  out << to_string(rep.verdict);
  if (rep.verdict == Verdict::DegenerateProportional) out << " " << to_string(rep.ratios.front());
  out << "\n";
  out << "facets " << rep.lc_facets.size() << "\n";
  out << "nest " << join_labels(rep.nest, labels) << "\n";
  for (const auto& fr : rep.lc_facets) {
    out << "facet ";
    for (std::size_t i = 0; i < fr.facet.normal.size(); ++i) {
      out << (i ? "+" : "") << to_string(fr.facet.normal[i]) << "z" << i + 1;
    }
    out << "=" << to_string(fr.facet.rhs) << " supporters " << join_labels(fr.facet.components, labels)
        << " sample " << format_point(fr.sample) << " m=" << to_string(fr.mult)
        << " G=" << format_support(fr.G, labels) << "\n";
  }
  for (const auto& [p, m] : rep.failures) {
    out << "multiplicity " << to_string(m) << " at " << format_point(p) << "\n";
  }
  if (!rep.ratios.empty()) out << "ratios " << join(rep.ratios) << "\n";
  return 0;
}

// Compares the expected block of one fixture; returns the number of failures.
int selftest_one(const Fixture& f, std::ostream& out) {
  int failures = 0;
  auto check = [&](const std::string& item, const std::string& got, const std::string& want) {
    if (got == want) {
      out << "PASS " << f.name << " " << item << "\n";
    } else {
      ++failures;
      out << "FAIL " << f.name << " " << item << ": got " << got << ", expected " << want << "\n";
    }
  };
  try {
    const auto t = build_tuple(f);
    const auto& g = t.graph();
    const auto& labels = g.labels();
    const auto& e = f.expected;
    if (e.canonical) check("canonical", join(g.canonical().coeffs), join(*e.canonical));
    if (e.fundamental_cycle) {
      check("fundamental_cycle", format_coeffs(g.fundamental_cycle()), format_coeffs(ZDivisor(*e.fundamental_cycle)));
    }
    if (e.lct) {
      std::vector<Rational> got;
      for (std::size_t i = 0; i < t.r(); ++i) got.push_back(lct_axis(t, i));
      check("lct", join(got), join(*e.lct));
    }
    if (e.nest) {
      std::string want;
      for (const auto& s : *e.nest) want += (want.empty() ? "" : ",") + s;
      check("nest", join_labels(newton_nest(t), labels), want);
    }
    if (e.lc_facets || e.lc_supporters) {
      const auto lc = analyze_region(t, lc_region(t));
      if (e.lc_facets) check("lc_facets", std::to_string(lc.facets.size()), std::to_string(*e.lc_facets));
      if (e.lc_supporters) {
        std::string want;
        for (const auto& s : *e.lc_supporters) want += (want.empty() ? "" : ",") + s;
        check("lc_supporters", join_labels(lc.binding, labels), want);
      }
    }
    if (e.verdict || e.ratio) {
      const auto rep = bijection_report(t);
      if (e.verdict) check("verdict", std::string(to_string(rep.verdict)), *e.verdict);
      if (e.ratio) check("ratio", rep.ratios.empty() ? "-" : to_string(rep.ratios.front()), to_string(*e.ratio));
    }
    for (const auto& p : e.points) {
      const Point c(p.c);
      const auto rec = jump_record(t, c);
      if (p.m) check("m" + format_point(c), to_string(rec.mult), to_string(*p.m));
      if (p.D) check("D" + format_point(c), format_coeffs(rec.D), format_coeffs(ZDivisor(*p.D)));
    }
  } catch (const Error& err) {
    ++failures;
    out << "FAIL " << f.name << ": " << err.what() << "\n";
  }
  return failures;
}

int cmd_selftest(const std::string& name, std::ostream& out) {
  std::vector<std::string> names;
  if (name.empty()) {
    names = list_fixtures();
    if (names.empty()) throw Error(Errc::Usage, "no fixtures in " + fixture_dir());
  } else {
    names.push_back(name);
  }
  int failures = 0;
  for (const auto& n : names) failures += selftest_one(load_fixture(n), out);
  out << "selftest " << (failures == 0 ? "passed" : "failed: " + std::to_string(failures)) << "\n";
  return failures == 0 ? 0 : 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mixed multiplier ideals on rational surface singularities", "mmi"};
  app.require_subcommand(1);
  std::string fixture, divisor, c, base, dir, until, horizon, box, svg, csv;

  auto add_fixture = [&](CLI::App* sub, bool required = true) {
    auto* opt = sub->add_option("fixture", fixture, "Fixture name or path to a JSON file");
    if (required) opt->required();
  };
  auto* validate = app.add_subcommand("validate", "Check the graph, the ideals and the log-canonical region");
  add_fixture(validate);
  auto* kpi = app.add_subcommand("kpi", "Relative canonical divisor");
  add_fixture(kpi);
  auto* fcycle = app.add_subcommand("fcycle", "Fundamental cycle and its colength");
  add_fixture(fcycle);
  auto* closure = app.add_subcommand("closure", "Antinef closure of a divisor");
  add_fixture(closure);
  closure->add_option("--divisor", divisor, "Integer coefficients a,b,...")->required();
  auto* point = app.add_subcommand("point", "Divisors, jumping divisors and multiplicity at a point");
  add_fixture(point);
  point->add_option("--c", c, "Point p/q,p/q,...")->required();
  auto* ray = app.add_subcommand("ray", "Jumping points along a ray");
  add_fixture(ray);
  ray->add_option("--base", base, "Base point")->required();
  ray->add_option("--dir", dir, "Integer direction")->required();
  ray->add_option("--until", until, "Largest ray parameter")->required();
  ray->add_option("--csv", csv, "Write the walk as CSV");
  auto* poinc = app.add_subcommand("poincare", "Closed form of the Poincare series along a ray");
  add_fixture(poinc);
  poinc->add_option("--base", base, "Base point")->required();
  poinc->add_option("--dir", dir, "Integer direction")->required();
  poinc->add_option("--horizon", horizon, "Largest ray parameter to search")->required();
  auto* walls = app.add_subcommand("walls", "Constancy regions and facets in a box (two ideals)");
  add_fixture(walls);
  walls->add_option("--box", box, "Box corner x,y")->required();
  walls->add_option("--svg", svg, "Write an SVG plot");
  walls->add_option("--csv", csv, "Write PATH.cells.csv, PATH.facets.csv, PATH.vertices.csv");
  auto* lct = app.add_subcommand("lct", "Log-canonical thresholds along the axes");
  add_fixture(lct);
  auto* nest = app.add_subcommand("nest", "Newton nest");
  add_fixture(nest);
  auto* bij = app.add_subcommand("bijection", "Facets of the log-canonical wall against the Newton nest");
  add_fixture(bij);
  auto* selftest = app.add_subcommand("selftest", "Check the expected values stored in fixtures");
  add_fixture(selftest, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*selftest) return cmd_selftest(fixture, out);
    const Fixture f = load_fixture(fixture);
    if (*validate) return cmd_validate(f, out);
    if (*kpi) {
      out << "K = " << format_coeffs(build_fixture_graph(f)->canonical()) << "\n";
      return 0;
    }
    if (*fcycle) {
      const auto g = build_fixture_graph(f);
      out << "Z = " << format_coeffs(g->fundamental_cycle()) << "\n";
      out << "colength " << to_string(colength(*g, g->fundamental_cycle())) << "\n";
      return 0;
    }
    if (*closure) {
      const auto g = build_fixture_graph(f);
      const ZDivisor d(parse_integers(divisor));
      if (d.size() != g->size()) throw Error(Errc::LengthMismatch, "divisor length");
      const auto a = antinef_closure(*g, d);
      const auto b = antinef_closure_unit(*g, d);
      out << "closure = " << format_coeffs(a) << "\n";
      out << "colength " << to_string(colength(*g, a)) << "\n";
      if (a != b) throw Error(Errc::InternalConsistency, "unit-step closure gives " + format_coeffs(b));
      return 0;
    }
    if (*point) return cmd_point(f, c, out);
    if (*ray) return cmd_ray(f, base, dir, until, csv, out);
    if (*poinc) return cmd_poincare(f, base, dir, horizon, out);
    if (*walls) return cmd_walls(f, box, svg, csv, out);
    if (*lct) return cmd_lct(f, out);
    if (*nest) return cmd_nest(f, out);
    if (*bij) return cmd_bijection(f, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(e.category());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 1;
}

}  // namespace mmi::cli
