#include "chow/rational.hpp"

#include <cctype>

#include "chow/error.hpp"

namespace chow {

Rational make_rational(long numerator, unsigned long denominator) {
  if (denominator == 0) throw DomainError("zero denominator");
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  auto digits = [&](bool allow_sign) {
    std::size_t start = pos;
    if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    std::size_t first_digit = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == first_digit) throw ParseError("expected digits in rational", pos);
    return std::string(text.substr(start, pos - start));
  };
  std::string num = digits(true);
  std::string den = "1";
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = digits(false);
  }
  if (pos != text.size()) throw ParseError("trailing characters in rational", pos);
  if (num.front() == '+') num.erase(0, 1);
  Integer n(num, 10);
  Integer d(den, 10);
  if (d == 0) throw ParseError("zero denominator", pos);
  Rational r(n, d);
  r.canonicalize();
  return r;
}

Rational pow(const Rational& base, unsigned exponent) {
  Integer num;
  Integer den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer factorial(unsigned k) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

Integer falling_product(long top, long count) {
  Integer r = 1;
  for (long j = 0; j < count; ++j) r *= (top - j);
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

}  // namespace chow
