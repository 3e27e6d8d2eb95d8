#include "mmi/ray_series.hpp"

#include <algorithm>
#include <set>

#include "mmi/error.hpp"

namespace mmi {

namespace {

struct RayData {
  std::vector<Rational> base;  // (base.F)_j - k_j
  std::vector<Integer> slope;  // (dir.F)_j
};

RayData ray_data(const IdealTuple& t, const Ray& ray) {
  if (ray.base.size() != t.r()) {
    throw Error(Errc::LengthMismatch, "ray has " + std::to_string(ray.base.size()) +
                                          " coordinates, tuple has " + std::to_string(t.r()) +
                                          " ideals");
  }
  RayData d;
  d.base = jump_values(t, ray.base);
  d.slope.assign(t.n(), Integer(0));
  bool any = false;
  for (std::size_t j = 0; j < t.n(); ++j) {
    for (std::size_t i = 0; i < t.r(); ++i) d.slope[j] += ray.dir[i] * t.e(i, j);
    if (d.slope[j] != 0) any = true;
  }
  if (!any) throw Error(Errc::DirectionOrthogonal, "dir.F_j = 0 for every component");
  return d;
}

Point shifted(const Point& p, const std::vector<Integer>& dir, long k) {
  std::vector<Rational> c(p.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = p[i] + Rational(dir[i] * k);
  return Point(std::move(c));
}

}  // namespace

std::optional<RayPoint> ray_next(const IdealTuple& t, const Ray& ray, const Rational& after) {
  const RayData d = ray_data(t, ray);
  Rational mu = after;
  while (true) {
    std::optional<Rational> best;
    for (std::size_t j = 0; j < t.n(); ++j) {
      if (d.slope[j] == 0) continue;
      const Rational v = d.base[j] + mu * Rational(d.slope[j]);
      const Integer level = std::max(Integer(1), Integer(floor_of(v) + 1));
      const Rational cand = (Rational(level) - d.base[j]) / Rational(d.slope[j]);
      if (!best || cand < *best) best = cand;
    }
    mu = *best;
    auto rec = jump_record(t, ray.at(mu));
    if (rec.mult > 0) return RayPoint{mu, std::move(rec)};
  }
}

std::vector<RayPoint> ray_walk(const IdealTuple& t, const Ray& ray, const Rational& bound) {
  if (bound <= 0) throw Error(Errc::InvalidPoint, "walk bound must be positive");
  std::vector<RayPoint> out;
  Rational mu = 0;
  while (true) {
    auto next = ray_next(t, ray, mu);
    if (!next || next->mu > bound) break;
    mu = next->mu;
    out.push_back(std::move(*next));
  }
  return out;
}

Integer rho(const IdealTuple& t, const Point& c, const std::vector<Integer>& alpha) {
  if (alpha.size() != t.r()) throw Error(Errc::LengthMismatch, "alpha");
  Integer out = 0;
  for (std::size_t i : maximal_jumping_divisor(t, c).components()) {
    for (std::size_t l = 0; l < t.r(); ++l) out += alpha[l] * t.rho(l, i);
  }
  return out;
}

SeriesClosedForm poincare(const IdealTuple& t, const Ray& ray, const Rational& horizon) {
  const RayData d = ray_data(t, ray);

  // Every jumping point has an integral v_j for some j with a nonzero slope;
  // these values of mu fall into finitely many classes modulo 1.
  std::set<Rational> classes;
  for (std::size_t j = 0; j < t.n(); ++j) {
    if (d.slope[j] == 0) continue;
    for (Integer l = 0; l < d.slope[j]; ++l) {
      classes.insert(frac_of((Rational(l) - d.base[j]) / Rational(d.slope[j])));
    }
  }

  SeriesClosedForm s{ray, {}, {}, 1};
  auto recurrence_holds = [&](const Rational& mu) {
    for (std::size_t j = 0; j < t.n(); ++j) {
      if (d.slope[j] == 0) continue;
      const Rational v = d.base[j] + mu * Rational(d.slope[j]);
      if (is_integral(v) && v <= 0) return false;
    }
    return true;
  };
  for (const Rational& r0 : classes) {
    Rational mu = r0;
    while (!recurrence_holds(mu)) {
      if (mu > horizon) {
        throw Error(Errc::HorizonTooSmall,
                    "class of mu = " + to_string(r0) + " not periodic before " +
                        format_point(ray.at(mu)));
      }
      const Point p = ray.at(mu);
      const Integer m = multiplicity(t, p);
      if (m > 0) s.prefix.push_back({p, mu, m});
      mu += 1;
    }
    if (mu > horizon) {
      throw Error(Errc::HorizonTooSmall,
                  "class of mu = " + to_string(r0) + " becomes periodic only at " +
                      format_point(ray.at(mu)));
    }
    const Point p = ray.at(mu);
    const Integer m = multiplicity(t, p);
    const Integer step = rho(t, p, ray.dir);
    if (m > 0) {
      s.terms.push_back({p, mu, m, step});
    } else if (step > 0) {
      s.terms.push_back({shifted(p, ray.dir, 1), mu + 1, step, step});
    }
  }
  auto by_mu = [](const auto& a, const auto& b) { return a.mu < b.mu; };
  std::sort(s.prefix.begin(), s.prefix.end(), by_mu);
  std::sort(s.terms.begin(), s.terms.end(), by_mu);

  auto absorb = [&](const Point& p) {
    for (const auto& x : p.coords) s.exponent_denominator = lcm_of(s.exponent_denominator, x.get_den());
  };
  for (const auto& m : s.prefix) absorb(m.point);
  for (const auto& term : s.terms) absorb(term.anchor);
  return s;
}

std::vector<SeriesMonomial> series_expand(const SeriesClosedForm& s, std::size_t n) {
  std::vector<SeriesMonomial> all = s.prefix;
  for (const auto& term : s.terms) {
    for (std::size_t k = 0; k < n; ++k) {
      all.push_back({shifted(term.anchor, s.ray.dir, static_cast<long>(k)), term.mu + Rational(k),
                     term.m0 + term.rho * Integer(k)});
    }
  }
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.mu < b.mu; });
  std::vector<SeriesMonomial> out;
  for (auto& m : all) {
    if (!out.empty() && out.back().mu == m.mu) {
      out.back().m += m.m;
    } else {
      if (out.size() == n) break;
      out.push_back(std::move(m));
    }
  }
  return out;
}

namespace {

std::string exponent(const std::vector<Rational>& x, const Integer& e) {
  std::string out = "z^(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ",";
    out += to_string(x[i] * Rational(e));
  }
  return out + ")";
}

}  // namespace

std::string format_series(const SeriesClosedForm& s) {
  const Integer& e = s.exponent_denominator;
  std::vector<Rational> u(s.ray.dir.begin(), s.ray.dir.end());
  const std::string denom = "(1-" + exponent(u, e) + ")";
  std::string out = "e = " + to_string(e) + "\n";
  for (const auto& m : s.prefix) {
    out += "+ " + to_string(m.m) + "*" + exponent(m.point.coords, e) + "\n";
  }
  for (const auto& term : s.terms) {
    out += "+ " + to_string(term.m0) + "*" + exponent(term.anchor.coords, e) + "/" + denom + "\n";
    if (term.rho != 0) {
      std::vector<Rational> next = term.anchor.coords;
      for (std::size_t i = 0; i < next.size(); ++i) next[i] += u[i];
      out += "+ " + to_string(term.rho) + "*" + exponent(next, e) + "/" + denom + "^2\n";
    }
  }
  return out;
}

}  // namespace mmi
