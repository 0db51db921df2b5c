#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace segmarket {

/// Exact fraction with arbitrary-precision numerator and denominator.
/// GMP keeps every result canonical (denominator > 0, gcd = 1).
using Rational = mpq_class;

/// Parses "p/q", an integer, or a finite decimal literal ("0.36" -> 9/25,
/// "-1.5", ".5"). Throws Error(ParseError) on anything else.
Rational parse_rational(std::string_view text);

/// num/den in canonical form. mpq_class(num, den) alone does not reduce,
/// and comparisons on unreduced values are wrong. Throws InvalidArgument on den = 0.
Rational ratio(long num, long den);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Fixed-point rendering rounded half away from zero.
std::string to_decimal(const Rational& value, int digits = 6);

}  // namespace segmarket
