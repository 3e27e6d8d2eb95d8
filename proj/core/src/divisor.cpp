#include "mmi/divisor.hpp"

#include <algorithm>
#include <cassert>

namespace mmi {

ZDivisor ZDivisor::from(std::initializer_list<long> values) {
  ZDivisor d;
  d.coeffs.reserve(values.size());
  for (long v : values) d.coeffs.emplace_back(v);
  return d;
}

bool ZDivisor::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Integer& c) { return c == 0; });
}

bool ZDivisor::is_effective() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Integer& c) { return c >= 0; });
}

bool leq(const ZDivisor& lhs, const ZDivisor& rhs) {
  assert(lhs.size() == rhs.size());
  for (std::size_t j = 0; j < lhs.size(); ++j) {
    if (lhs[j] > rhs[j]) return false;
  }
  return true;
}

bool lex_less(const ZDivisor& lhs, const ZDivisor& rhs) {
  return std::lexicographical_compare(lhs.coeffs.begin(), lhs.coeffs.end(), rhs.coeffs.begin(),
                                      rhs.coeffs.end());
}

bool ReducedDivisor::empty() const {
  return std::none_of(support.begin(), support.end(), [](bool b) { return b; });
}

std::size_t ReducedDivisor::count() const {
  return static_cast<std::size_t>(std::count(support.begin(), support.end(), true));
}

std::vector<std::size_t> ReducedDivisor::components() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < support.size(); ++j) {
    if (support[j]) out.push_back(j);
  }
  return out;
}

ReducedDivisor reduced_from(std::size_t n, const std::vector<std::size_t>& components) {
  ReducedDivisor d(n);
  for (auto j : components) d.support.at(j) = true;
  return d;
}

std::string format_coeffs(const ZDivisor& d) {
  std::string out;
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (j) out += ',';
    out += d[j].get_str();
  }
  return out;
}

std::string format_coeffs(const QDivisor& d) {
  std::string out;
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (j) out += ',';
    out += to_string(d[j]);
  }
  return out;
}

std::string format_support(const ReducedDivisor& d, const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t j : d.components()) {
    if (!out.empty()) out += ',';
    out += labels.at(j);
  }
  return out.empty() ? "-" : out;
}

}  // namespace mmi
