#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace mcw {

// Exact coefficient field for the whole library. cpp_rational keeps the
// canonical form we rely on: gcd(|num|, den) = 1, den > 0, zero is 0/1.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Renders as "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Parses "p" or "p/q" (optional leading '-'). Throws ParseError with the
/// byte offset of the first offending character. Denominator 0 is rejected.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& value);

/// Requires an integer value that fits in long.
long to_long(const Rational& value);

double to_double(const Rational& value);
long double to_long_double(const Rational& value);

}  // namespace mcw
