#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mmi/numeric.hpp"

namespace mmi {

/// Exceptional divisor with integer coefficients, indexed by component.
struct ZDivisor {
  std::vector<Integer> coeffs;

  ZDivisor() = default;
  explicit ZDivisor(std::size_t n) : coeffs(n, Integer(0)) {}
  explicit ZDivisor(std::vector<Integer> c) : coeffs(std::move(c)) {}
  static ZDivisor from(std::initializer_list<long> values);

  std::size_t size() const noexcept { return coeffs.size(); }
  const Integer& operator[](std::size_t j) const { return coeffs[j]; }
  Integer& operator[](std::size_t j) { return coeffs[j]; }

  bool is_zero() const;
  bool is_effective() const;

  friend bool operator==(const ZDivisor&, const ZDivisor&) = default;
};

/// Componentwise D <= D'. Both divisors must have the same length.
bool leq(const ZDivisor& lhs, const ZDivisor& rhs);
/// Lexicographic order; used only to give divisors a deterministic ordering.
bool lex_less(const ZDivisor& lhs, const ZDivisor& rhs);

/// Exceptional Q-divisor.
struct QDivisor {
  std::vector<Rational> coeffs;

  QDivisor() = default;
  explicit QDivisor(std::size_t n) : coeffs(n, Rational(0)) {}
  explicit QDivisor(std::vector<Rational> c) : coeffs(std::move(c)) {}

  std::size_t size() const noexcept { return coeffs.size(); }
  const Rational& operator[](std::size_t j) const { return coeffs[j]; }
  Rational& operator[](std::size_t j) { return coeffs[j]; }

  friend bool operator==(const QDivisor&, const QDivisor&) = default;
};

/// Reduced divisor: a set of exceptional components.
struct ReducedDivisor {
  std::vector<bool> support;

  ReducedDivisor() = default;
  explicit ReducedDivisor(std::size_t n) : support(n, false) {}

  std::size_t size() const noexcept { return support.size(); }
  bool contains(std::size_t j) const { return support[j]; }
  bool empty() const;
  std::size_t count() const;
  std::vector<std::size_t> components() const;

  friend bool operator==(const ReducedDivisor&, const ReducedDivisor&) = default;
};

ReducedDivisor reduced_from(std::size_t n, const std::vector<std::size_t>& components);

/// "3,2,3,1,1,1"
std::string format_coeffs(const ZDivisor& d);
std::string format_coeffs(const QDivisor& d);
/// "E2,E4" using 1-based labels; "-" for the empty divisor.
std::string format_support(const ReducedDivisor& d, const std::vector<std::string>& labels);

}  // namespace mmi
