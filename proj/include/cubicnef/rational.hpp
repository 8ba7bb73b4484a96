#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cubicnef {

// mpq_class keeps values canonical (lowest terms, positive denominator)
// through every arithmetic operator.
using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q", "p", or a finite decimal such as "1.25". Throws UsageError.
Rational parse_rational(std::string_view text);

/// Serialization form: always "num/den", e.g. "3/1", "-1/2".
std::string to_fraction_string(const Rational& r);

/// Display form: "3", "-1/2".
std::string to_display_string(const Rational& r);

/// Nearest double (correctly rounded).
double to_double(const Rational& r);

/// Exact binary value of a finite double.
Rational from_double(double value);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

} // namespace cubicnef
