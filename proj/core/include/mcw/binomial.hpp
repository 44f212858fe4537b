#pragma once

#include <stdexcept>

#include "mcw/rational.hpp"

namespace mcw {

inline Integer factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Integer out = 1;
  for (int k = 2; k <= n; ++k) out *= k;
  return out;
}

/// x(x+1)...(x+k-1); empty product for k = 0.
inline Rational rising_factorial(const Rational& x, int k) {
  if (k < 0) throw std::invalid_argument("rising_factorial: negative k");
  Rational out = 1;
  for (int j = 0; j < k; ++j) out *= x + j;
  return out;
}

/// x(x-1)...(x-k+1); empty product for k = 0.
inline Rational falling_factorial(const Rational& x, int k) {
  if (k < 0) throw std::invalid_argument("falling_factorial: negative k");
  Rational out = 1;
  for (int j = 0; j < k; ++j) out *= x - j;
  return out;
}

/// Generalized binomial coefficient x(x-1)...(x-k+1)/k! for rational x.
inline Rational general_binomial(const Rational& x, int k) {
  if (k < 0) throw std::invalid_argument("general_binomial: negative k");
  return falling_factorial(x, k) / Rational(factorial(k));
}

}  // namespace mcw
