#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace polyef {

/// Exact rational. GMP keeps every arithmetic result in canonical form
/// (positive denominator, coprime numerator/denominator).
using Rational = mpq_class;

/// Parses "-5", "22/3", "+7" or the decimal form "22.5" exactly.
/// Throws ParseError on anything else (including a zero denominator).
Rational parse_rational(std::string_view text);

/// Canonical "p/q" or integer form; never a decimal.
std::string to_string(const Rational &value);

inline int sign(const Rational &value) { return sgn(value); }

} // namespace polyef
