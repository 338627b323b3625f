#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace picalb {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q", "p" or "-p/q". Throws Error(Schema) on malformed input or q = 0.
Rational parse_rational(std::string_view text);

/// Always "p/q" with q > 0 and gcd(p, q) = 1, including q = 1.
std::string format_rational(const Rational& value);

/// Smallest integer n with n >= value.
Integer ceil_rational(const Rational& value);

/// Smallest integer n with n > value.
Integer next_integer_above(const Rational& value);

}  // namespace picalb
