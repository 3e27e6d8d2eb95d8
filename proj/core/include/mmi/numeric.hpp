#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace mmi {

using Integer = mpz_class;
using Rational = mpq_class;

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);
/// Fractional part {q} = q - floor(q), in [0, 1).
Rational frac_of(const Rational& q);
bool is_integral(const Rational& q);

Integer lcm_of(const Integer& a, const Integer& b);

/// "p/q" in lowest terms, or just "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "p", "-p" or "p/q". Rejects zero denominators, signs on the
/// denominator, whitespace and fractions not in lowest terms.
/// Throws Error(RationalFormatError).
Rational parse_rational(std::string_view text);

/// Comma separated list of rationals, e.g. "1/2,0,3".
std::vector<Rational> parse_rational_list(std::string_view text);

/// Decimal approximation with the given number of significant digits.
std::string to_decimal(const Rational& q, int significant_digits = 20);

}  // namespace mmi
