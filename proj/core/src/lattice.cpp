#include "mmi/lattice.hpp"

#include <numeric>
#include <vector>

#include "mmi/error.hpp"

namespace mmi {

namespace {

void check_length(const DualGraph& g, const ZDivisor& d) {
  if (d.size() != g.size()) {
    throw Error(Errc::LengthMismatch, "divisor has " + std::to_string(d.size()) +
                                          " coefficients, graph has " + std::to_string(g.size()));
  }
}

ZDivisor clamped(const ZDivisor& d) {
  ZDivisor out = d;
  for (auto& c : out.coeffs) {
    if (c < 0) c = 0;
  }
  return out;
}

// products[k] = D.E_k, maintained incrementally while unloading.
std::vector<Integer> products_of(const DualGraph& g, const ZDivisor& d) {
  std::vector<Integer> p(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) p[k] = g.dot(d, k);
  return p;
}

void add_multiple(const DualGraph& g, ZDivisor& d, std::vector<Integer>& products, std::size_t j,
                  const Integer& count) {
  d[j] += count;
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (g.entry(k, j) != 0) products[k] += count * g.entry(k, j);
  }
}

}  // namespace

bool is_antinef(const DualGraph& g, const ZDivisor& d) {
  check_length(g, d);
  if (!d.is_effective()) return false;
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (g.dot(d, j) > 0) return false;
  }
  return true;
}

ZDivisor antinef_closure(const DualGraph& g, const ZDivisor& d) {
  std::vector<std::size_t> order(g.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  return antinef_closure(g, d, order);
}

ZDivisor antinef_closure(const DualGraph& g, const ZDivisor& d,
                         std::span<const std::size_t> scan_order) {
  check_length(g, d);
  ZDivisor out = clamped(d);
  auto products = products_of(g, out);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t j : scan_order) {
      if (products[j] <= 0) continue;
      const Integer self = -g.self_intersection(j);
      Integer step;
      mpz_cdiv_q(step.get_mpz_t(), products[j].get_mpz_t(), self.get_mpz_t());
      add_multiple(g, out, products, j, step);
      changed = true;
      break;
    }
  }
  return out;
}

ZDivisor antinef_closure_unit(const DualGraph& g, const ZDivisor& d) {
  check_length(g, d);
  ZDivisor out = clamped(d);
  auto products = products_of(g, out);
  const Integer one = 1;
  for (std::size_t j = 0; j < g.size();) {
    if (products[j] > 0) {
      add_multiple(g, out, products, j, one);
      j = 0;
    } else {
      ++j;
    }
  }
  return out;
}

Integer colength(const DualGraph& g, const ZDivisor& d) {
  if (!is_antinef(g, d)) throw Error(Errc::NotAntinef, "colength needs an antinef divisor");
  const Rational twice = -(Rational(g.form(d, d)) + g.form(d, g.canonical()));
  if (!is_integral(twice) || twice.get_num() % 2 != 0) {
    throw Error(Errc::NonIntegralResult, "-D.(D+K) = " + to_string(twice) + " is not even");
  }
  const Integer out = twice.get_num() / 2;
  if (out < 0) throw Error(Errc::NonIntegralResult, "negative colength " + out.get_str());
  return out;
}

}  // namespace mmi
