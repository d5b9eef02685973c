#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace openmarkov {

/// Arbitrary-precision rational, always canonical (lowest terms, positive
/// denominator) after every arithmetic operation.
using Rational = mpq_class;

/// Accepts an integer ("-3"), a fraction ("7/12") or a finite decimal
/// ("0.125", "-2.5"). Decimals convert exactly. Throws SyntaxError.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or just "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Exact value of a finite double.
Rational from_double(double value);

}  // namespace openmarkov
