#pragma once

#include <gmpxx.h>

#include <string>

namespace metrocap {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Natural logarithm of a positive arbitrary-precision integer.
///
/// Works for values far outside the range of double: the integer is split as
/// mantissa * 2^exp with mantissa in [0.5, 1), so the result is
/// exp * log(2) + log(mantissa). Relative error is at the level of double
/// rounding. Throws std::domain_error for x <= 0.
double log_big(const BigInt &x);

/// log(num) - log(den) of a positive rational, exact in the same sense as log_big.
double log_rational(const Rational &q);

BigInt binomial(unsigned long n, unsigned long k);
BigInt factorial(unsigned long n);

/// Decimal string, no sign padding.
std::string to_decimal(const BigInt &x);

/// "num/den" in lowest terms; integers render as "k/1".
std::string to_fraction(const Rational &q);

/// Parses "num/den" or a plain integer.
Rational parse_fraction(const std::string &text);

inline constexpr double kLn2 = 0.69314718055994530941723212145817656807550013436026;
inline constexpr double kPi = 3.14159265358979323846264338327950288419716939937511;

}  // namespace metrocap
