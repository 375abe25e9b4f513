#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace seqforge {

/// Exact signed integer. Recurrence coefficients and intermediate values may be negative.
using BigInt = mpz_class;

/// Exact nonnegative count. Same representation as BigInt; nonnegativity is a convention
/// upheld by the counting routines.
using BigCount = mpz_class;

using Rational = mpq_class;

/// Full decimal rendering, never scientific notation.
std::string to_decimal_string(const BigInt& value);

/// Renders a nonnegative rational with the requested number of significant digits,
/// rounded half-up, in fixed-point notation ("0.000123456789012").
std::string to_decimal_string(const Rational& value, int significant_digits);

/// Parses "0.001", "1e-3", "25", "-2.5E+1" into an exact rational.
/// Throws std::invalid_argument on malformed input.
Rational parse_decimal(std::string_view text);

/// Parses an optionally signed decimal integer. Throws std::invalid_argument.
BigInt parse_integer(std::string_view text);

BigInt pow2(unsigned long exponent);

}  // namespace seqforge
