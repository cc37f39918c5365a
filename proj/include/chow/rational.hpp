#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace chow {

using Integer = mpz_class;
// Always canonical: gcd(|num|, den) = 1 and den > 0.
using Rational = mpq_class;

Rational make_rational(long numerator, unsigned long denominator = 1);

// Parses "n" or "n/d"; throws ParseError on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

Rational pow(const Rational& base, unsigned exponent);

Integer factorial(unsigned k);

// Falling product prod_{j=0}^{count-1} (top - j); empty product is 1.
Integer falling_product(long top, long count);

std::string to_string(const Rational& value);

}  // namespace chow
