#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace waring {

using Integer  = mpz_class;
using Rational = mpq_class;

// Canonicalized rational n/d.
Rational rat(long n, long d);
Rational rat(const Integer& n, const Integer& d);

// Exact value of a decimal literal such as "21.1139297" or "-0.5"
// (integer-scaled by a power of ten, never rounded).
Rational rational_from_decimal(const std::string& text);

Integer floor_rational(const Rational& q);
Integer ceil_rational(const Rational& q);

// "n/d", or just "n" for integers.
std::string to_string(const Rational& q);

} // namespace waring
