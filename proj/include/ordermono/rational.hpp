#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ordermono {

/// Arbitrary precision exact rational. Values produced by arithmetic are
/// always in canonical form.
using Rational = mpq_class;

/// Parses "p/q", an integer, or a decimal ("0.25", "-1.5e-3") exactly.
/// Throws ParseError on anything else (including a zero denominator).
Rational parse_rational(std::string_view text);

/// Canonical "p/q" text; integers keep the "/1" suffix.
std::string to_string(const Rational& value);

/// Decimal rendering for human-facing output; exactness is not implied.
std::string to_decimal(const Rational& value, int digits = 6);

/// Nearest rational with the given denominator (ties away from zero).
Rational round_to_denominator(double value, const mpz_class& denominator);

}  // namespace ordermono
