#include "mmi/numeric.hpp"

#include <cctype>

#include "mmi/error.hpp"

namespace mmi {

Integer floor_of(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Integer ceil_of(const Rational& q) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Rational frac_of(const Rational& q) { return q - Rational(floor_of(q)); }

bool is_integral(const Rational& q) { return q.get_den() == 1; }

Integer lcm_of(const Integer& a, const Integer& b) {
  Integer out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

[[noreturn]] void bad_rational(std::string_view text, const char* why) {
  throw Error(Errc::RationalFormatError, "\"" + std::string(text) + "\": " + why);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_text = body.substr(0, slash);
  if (!all_digits(num_text)) bad_rational(text, "expected an integer numerator");
  Integer num{std::string(num_text)};
  Integer den = 1;
  if (slash != std::string_view::npos) {
    const std::string_view den_text = body.substr(slash + 1);
    if (!all_digits(den_text)) bad_rational(text, "expected a positive integer denominator");
    den = Integer(std::string(den_text));
    if (den == 0) bad_rational(text, "zero denominator");
    Integer g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g != 1 && num != 0) bad_rational(text, "not in lowest terms");
    if (num == 0 && den != 1) bad_rational(text, "not in lowest terms");
  }
  Rational out(negative ? Integer(-num) : num, den);
  out.canonicalize();
  return out;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_rational(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string to_decimal(const Rational& q, int significant_digits) {
  mpf_class value(q, static_cast<mp_bitcnt_t>(significant_digits) * 4 + 64);
  char* raw = nullptr;
  gmp_asprintf(&raw, "%.*Fg", significant_digits, value.get_mpf_t());
  std::string out(raw);
  void (*free_fn)(void*, std::size_t) = nullptr;
  mp_get_memory_functions(nullptr, nullptr, &free_fn);
  free_fn(raw, out.size() + 1);
  return out;
}

}  // namespace mmi
