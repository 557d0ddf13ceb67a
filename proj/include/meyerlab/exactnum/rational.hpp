#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace meyerlab {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "n", "-n" or "n/d" (d > 0 after sign normalisation). Throws UsageError.
Rational parse_rational(std::string_view text);

// Always "num/den", the file format for exact values.
std::string to_fraction_string(const Rational& q);

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);
Rational abs_of(const Rational& q);

// Largest multiple of 2^-bits that is <= q (resp. smallest >= q).
Rational round_down_dyadic(const Rational& q, long bits);
Rational round_up_dyadic(const Rational& q, long bits);

Rational pow_of(const Rational& q, unsigned long e);

// 2^e for any sign of e.
Rational power_of_two(long e);

}  // namespace meyerlab
