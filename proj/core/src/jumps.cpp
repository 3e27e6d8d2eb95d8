#include "mmi/jumps.hpp"

#include <algorithm>
#include <map>

#include "mmi/error.hpp"
#include "mmi/lattice.hpp"

namespace mmi {

namespace {

ZDivisor indicator(const std::vector<std::size_t>& components, std::size_t n) {
  ZDivisor d(n);
  for (std::size_t j : components) d[j] = 1;
  return d;
}

ZDivisor indicator(const ReducedDivisor& h) { return indicator(h.components(), h.size()); }

ZDivisor plus(const ZDivisor& a, const ZDivisor& b) {
  ZDivisor out = a;
  for (std::size_t j = 0; j < out.size(); ++j) out[j] += b[j];
  return out;
}

// (A + S).S + #components(S) for a reduced S.
Integer form_plus_components(const DualGraph& g, const ZDivisor& a, const ReducedDivisor& s) {
  const ZDivisor ind = indicator(s);
  return g.form(plus(a, ind), ind) + Integer(g.connected_components(s).size());
}

}  // namespace

std::vector<WallMembership> wall_lines(const IdealTuple& t, const Point& c) {
  const auto v = jump_values(t, c);
  const auto h = maximal_jumping_divisor(t, c);
  std::vector<WallMembership> out;
  for (std::size_t j : h.components()) out.push_back({j, v[j].get_num()});
  return out;
}

Integer multiplicity(const IdealTuple& t, const Point& c) {
  const auto h = maximal_jumping_divisor(t, c);
  if (h.empty()) return 0;
  const Integer m = form_plus_components(t.graph(), ceil_divisor(t, c), h);
  if (m < 0) throw Error(Errc::InternalConsistency, "negative multiplicity at " + format_point(c));
  return m;
}

Integer multiplicity_fractional(const IdealTuple& t, const Point& c) {
  const auto h = maximal_jumping_divisor(t, c);
  if (h.empty()) return 0;
  const auto& g = t.graph();
  const auto v = jump_values(t, c);
  Rational total = 0;
  for (std::size_t i : h.components()) {
    for (std::size_t j : g.neighbors(i)) total += frac_of(v[j]);
    for (std::size_t l = 0; l < t.r(); ++l) total += c[l] * Rational(t.rho(l, i));
  }
  total -= Rational(g.connected_components(h).size());
  if (!is_integral(total)) {
    throw Error(Errc::NonIntegralTotal, to_string(total) + " at " + format_point(c));
  }
  return total.get_num();
}

Integer multiplicity_via_G(const IdealTuple& t, const Point& lambda) {
  const auto gl = minimal_jumping_divisor(t, lambda);
  return form_plus_components(t.graph(), ceil_divisor(t, lambda), gl);
}

Integer multiplicity_oracle(const IdealTuple& t, const Point& c) {
  const auto& g = t.graph();
  return colength(g, mmi_divisor(t, c)) - colength(g, mmi_divisor_left(t, c));
}

JumpRecord jump_record(const IdealTuple& t, const Point& c) {
  JumpRecord rec;
  rec.point = c;
  rec.D = mmi_divisor(t, c);
  rec.D_left = mmi_divisor_left(t, c);
  rec.H = maximal_jumping_divisor(t, c);
  rec.mult = multiplicity(t, c);
  rec.wall_lines = wall_lines(t, c);
  const auto& g = t.graph();
  const Integer oracle = colength(g, rec.D) - colength(g, rec.D_left);
  if (oracle != rec.mult) {
    throw Error(Errc::InternalConsistency, "multiplicity " + to_string(rec.mult) +
                                               " but colength difference " + to_string(oracle) +
                                               " at " + format_point(c));
  }
  if ((rec.mult > 0) != (rec.D != rec.D_left)) {
    throw Error(Errc::InternalConsistency, "jump test disagrees at " + format_point(c));
  }
  if (rec.mult > 0) rec.G = minimal_jumping_divisor(t, c);
  return rec;
}

JumpingVerdict is_jumping(const IdealTuple& t, const Point& c) {
  const auto h = maximal_jumping_divisor(t, c);
  JumpingVerdict out;
  if (!h.empty()) {
    const auto& g = t.graph();
    const ZDivisor a = plus(ceil_divisor(t, c), indicator(h));
    for (const auto& comp : g.connected_components(h)) {
      if (g.form(a, indicator(comp, t.n())) >= 0) {
        out.jumping = true;
        out.witness = comp;
        break;
      }
    }
  }
  if (out.jumping != (multiplicity(t, c) > 0)) {
    throw Error(Errc::InternalConsistency,
                "jumping criterion disagrees with the multiplicity at " + format_point(c));
  }
  return out;
}

std::vector<HInequality> check_H_inequalities(const IdealTuple& t, const Point& c) {
  const auto h = maximal_jumping_divisor(t, c);
  std::vector<HInequality> out;
  if (h.empty()) return out;
  const auto& g = t.graph();
  const ZDivisor a = plus(ceil_divisor(t, c), indicator(h));
  for (std::size_t i : h.components()) {
    out.push_back({{i}, false, g.dot(a, i)});
  }
  for (const auto& comp : g.connected_components(h)) {
    out.push_back({comp, true, g.form(a, indicator(comp, t.n()))});
  }
  for (const auto& e : out) {
    if (e.value < -1) {
      throw Error(Errc::InequalityViolated,
                  "value " + to_string(e.value) + " at " + format_point(c));
    }
  }
  return out;
}

namespace {

Rational dot(const std::vector<Integer>& a, const std::vector<Rational>& z) {
  Rational s = 0;
  for (std::size_t i = 0; i < z.size(); ++i) s += Rational(a[i]) * z[i];
  return s;
}

std::vector<Integer> column(const IdealTuple& t, std::size_t j) {
  std::vector<Integer> out(t.r());
  for (std::size_t i = 0; i < t.r(); ++i) out[i] = t.e(i, j);
  return out;
}

// Normalized key of the hyperplane a.z = rhs: primitive normal.
std::pair<std::vector<Integer>, Rational> hyperplane_key(std::vector<Integer> a, Rational rhs) {
  Integer g = 0;
  for (const auto& x : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  for (auto& x : a) x /= g;
  rhs /= Rational(g);
  return {std::move(a), std::move(rhs)};
}

}  // namespace

PerturbationReport perturbation_sum(const IdealTuple& t, const Point& lambda,
                                    const std::vector<Integer>& dir,
                                    const std::vector<Rational>& offset) {
  const std::size_t r = t.r();
  if (lambda.size() != r || dir.size() != r || offset.size() != r) {
    throw Error(Errc::LengthMismatch, "perturbation_sum arguments");
  }
  PerturbationReport rep{lambda, dir, offset, 0, 0, {}};
  rep.m_lambda = multiplicity(t, lambda);
  if (rep.m_lambda == 0) {
    throw Error(Errc::NotAJumpingPoint, format_point(lambda) + " is not a jumping point");
  }
  const auto& k = t.graph().canonical();
  std::vector<Rational> start(r);
  for (std::size_t i = 0; i < r; ++i) start[i] = lambda[i] + offset[i];

  // One crossing parameter per geometric hyperplane through lambda.
  std::map<std::pair<std::vector<Integer>, Rational>, Rational> crossings;
  for (const auto& w : wall_lines(t, lambda)) {
    const auto a = column(t, w.component);
    const Rational rhs = Rational(w.level) + k[w.component];
    Integer s = 0;
    for (std::size_t i = 0; i < r; ++i) s += a[i] * dir[i];
    if (s == 0) {
      throw Error(Errc::DirectionOrthogonal,
                  "direction lies in the wall of E" + std::to_string(w.component + 1));
    }
    const Rational mu = (rhs - dot(a, start)) / Rational(s);
    crossings.emplace(hyperplane_key(a, rhs), mu);
  }

  std::vector<Rational> mus;
  for (const auto& [key, mu] : crossings) {
    if (std::find(mus.begin(), mus.end(), mu) == mus.end()) mus.push_back(mu);
  }
  std::sort(mus.begin(), mus.end());

  std::vector<std::vector<Rational>> hull{lambda.coords};
  for (const auto& mu : mus) {
    std::vector<Rational> p(r);
    for (std::size_t i = 0; i < r; ++i) p[i] = start[i] + mu * Rational(dir[i]);
    for (const auto& x : p) {
      if (x < 0) throw Error(Errc::OffsetTooLarge, "crossing leaves the positive orthant");
    }
    hull.push_back(std::move(p));
  }

  // Any other wall hyperplane meeting the hull makes the offset too large.
  for (std::size_t j = 0; j < t.n(); ++j) {
    const auto a = column(t, j);
    Rational lo = dot(a, hull[0]) - k[j];
    Rational hi = lo;
    for (const auto& p : hull) {
      const Rational v = dot(a, p) - k[j];
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    const Rational at_lambda = dot(a, hull[0]) - k[j];
    for (Integer level = std::max(Integer(1), ceil_of(lo)); level <= floor_of(hi); ++level) {
      if (Rational(level) != at_lambda) {
        throw Error(Errc::OffsetTooLarge, "wall of E" + std::to_string(j + 1) + " at level " +
                                              to_string(level) + " crosses the perturbation");
      }
    }
  }

  for (std::size_t idx = 0; idx < mus.size(); ++idx) {
    Point p(hull[idx + 1]);
    PerturbationCrossing c{p, mus[idx], multiplicity(t, p), wall_lines(t, p)};
    rep.sum += c.mult;
    rep.crossings.push_back(std::move(c));
  }
  return rep;
}

PerturbationReport perturbation_sum(const IdealTuple& t, const Point& lambda,
                                    const std::vector<Integer>& dir) {
  const std::size_t r = t.r();
  std::vector<std::vector<Integer>> shapes;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<Integer> e(r, Integer(0));
    e[i] = 1;
    shapes.push_back(e);
    e[i] = -1;
    shapes.push_back(e);
  }
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = 0; b < r; ++b) {
      if (a == b) continue;
      std::vector<Integer> e(r, Integer(0));
      e[a] = 1;
      e[b] = -1;
      shapes.push_back(e);
    }
  }
  // Offsets parallel to dir do not move the line.
  auto parallel = [&](const std::vector<Integer>& e) {
    for (std::size_t a = 0; a < r; ++a) {
      for (std::size_t b = a + 1; b < r; ++b) {
        if (e[a] * dir[b] != e[b] * dir[a]) return false;
      }
    }
    return true;
  };
  for (int p = 3; p <= 64; ++p) {
    Rational delta(1);
    delta /= Rational(Integer(1) << p);
    for (const auto& e : shapes) {
      if (parallel(e)) continue;
      std::vector<Rational> offset(r);
      bool ok = true;
      for (std::size_t i = 0; i < r; ++i) {
        offset[i] = Rational(e[i]) * delta;
        if (lambda[i] + offset[i] < 0) ok = false;
      }
      if (!ok) continue;
      try {
        return perturbation_sum(t, lambda, dir, offset);
      } catch (const Error& err) {
        if (err.code() != Errc::OffsetTooLarge) throw;
      }
    }
  }
  throw Error(Errc::OffsetTooLarge, "no admissible offset found at " + format_point(lambda));
}

}  // namespace mmi
