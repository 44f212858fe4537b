#include "mcw/rational.hpp"

#include <cctype>

#include "mcw/errors.hpp"

namespace mcw {

std::string to_string(const Rational& value) {
  std::string out = numerator(value).str();
  if (denominator(value) != 1) {
    out += '/';
    out += denominator(value).str();
  }
  return out;
}

namespace {

Integer parse_integer_part(std::string_view text, std::size_t& pos) {
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
    throw ParseError("expected digit at position " + std::to_string(pos), pos);
  }
  Integer value = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    value = value * 10 + (text[pos] - '0');
    ++pos;
  }
  return negative ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  const Integer num = parse_integer_part(text, pos);
  Integer den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    const std::size_t den_start = pos;
    den = parse_integer_part(text, pos);
    if (den <= 0) {
      throw ParseError("denominator must be positive at position " + std::to_string(den_start),
                       den_start);
    }
  }
  if (pos != text.size()) {
    throw ParseError("unexpected character at position " + std::to_string(pos), pos);
  }
  return Rational(num, den);
}

bool is_integer(const Rational& value) { return denominator(value) == 1; }

long to_long(const Rational& value) {
  if (!is_integer(value)) {
    throw std::invalid_argument("to_long: " + to_string(value) + " is not an integer");
  }
  return numerator(value).convert_to<long>();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

long double to_long_double(const Rational& value) { return value.convert_to<long double>(); }

}  // namespace mcw
