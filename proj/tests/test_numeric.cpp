#include "doctest.h"
#include "mmi/divisor.hpp"
#include "mmi/error.hpp"
#include "mmi/linalg.hpp"
#include "mmi/numeric.hpp"

using namespace mmi;

namespace {

Errc code_of(const char* text) {
  try {
    parse_rational(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error for " << text);
  return Errc::InternalConsistency;
}

}  // namespace

TEST_CASE("floor, ceil and fractional part") {
  CHECK(floor_of(Rational(7, 2)) == 3);
  CHECK(floor_of(Rational(-7, 2)) == -4);
  CHECK(ceil_of(Rational(-7, 2)) == -3);
  CHECK(ceil_of(Rational(7, 2)) == 4);
  CHECK(floor_of(Rational(-4)) == -4);
  CHECK(frac_of(Rational(-1, 3)) == Rational(2, 3));
  CHECK(frac_of(Rational(5)) == 0);
  CHECK(is_integral(Rational(6) / 3));
  CHECK_FALSE(is_integral(Rational(5, 3)));
  CHECK(lcm_of(4, 6) == 12);
}

TEST_CASE("rational text round trip") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-5/6") == Rational(-5, 6));
  CHECK(parse_rational("0") == 0);
  CHECK(to_string(Rational(631, 2860)) == "631/2860");
  CHECK(to_string(Rational(-2)) == "-2");
  for (const char* text : {"0", "1", "-1", "7/8", "-1399/2730", "123456789012345678901/2"}) {
    CHECK(to_string(parse_rational(text)) == text);
  }
  CHECK(parse_rational_list("1/2,0,3") == std::vector<Rational>{Rational(1, 2), 0, 3});
  CHECK(parse_rational_list("").empty());
}

TEST_CASE("malformed rationals are rejected") {
  for (const char* text : {"3/0", "2/4", "1/-2", " 1", "1 ", "", "/3", "1/", "+1", "1.5", "0/2", "--1"}) {
    CHECK_MESSAGE(code_of(text) == Errc::RationalFormatError, text);
  }
}

TEST_CASE("decimal rendering") {
  CHECK(to_decimal(Rational(11, 24), 6) == "0.458333");
  CHECK(to_decimal(Rational(3, 8), 6) == "0.375");
}

TEST_CASE("divisor helpers") {
  const auto a = ZDivisor::from({1, 0, 2});
  const auto b = ZDivisor::from({1, 1, 2});
  CHECK(leq(a, b));
  CHECK_FALSE(leq(b, a));
  CHECK(lex_less(a, b));
  CHECK(a.is_effective());
  CHECK_FALSE(ZDivisor::from({0, -1}).is_effective());
  CHECK(ZDivisor(3).is_zero());
  CHECK(format_coeffs(a) == "1,0,2");
  const auto h = reduced_from(4, {1, 3});
  CHECK(h.count() == 2);
  CHECK(h.components() == std::vector<std::size_t>{1, 3});
  CHECK(format_support(h, {"E1", "E2", "E3", "E4"}) == "E2,E4");
  CHECK(format_support(ReducedDivisor(2), {"E1", "E2"}) == "-");
}

TEST_CASE("leading minors and exact solves") {
  const linalg::IntMatrix m{{-2, 1, 0}, {1, -2, 1}, {0, 1, -2}};
  CHECK(linalg::leading_minors(m) == std::vector<Integer>{-2, 3, -4});
  const linalg::RatMatrix a{{2, 1}, {1, 3}};
  const auto x = linalg::solve(a, {Rational(3), Rational(5)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rational(4, 5));
  CHECK((*x)[1] == Rational(7, 5));
  CHECK_FALSE(linalg::solve({{1, 2}, {2, 4}}, {Rational(1), Rational(2)}).has_value());
  CHECK(linalg::rank({{1, 2}, {2, 4}}) == 1);
  CHECK(linalg::rank({{1, 2}, {0, 1}, {3, 3}}) == 2);
}
