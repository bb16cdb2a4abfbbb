#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace oscoh {

// mpq_class keeps gcd(num, den) = 1 and den > 0 once canonicalized; every
// constructor in this library goes through parse_rational or arithmetic,
// both of which leave values canonical.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "7", "-2/3", "+4/6". Decimal points, exponents and zero
/// denominators are rejected with ParseError.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// Least common multiple of the denominators (1 for an empty span).
Integer common_denominator(std::span<const Rational> values);

}  // namespace oscoh
