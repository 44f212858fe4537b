#pragma once

#include "mcw/polynomial.hpp"
#include "mcw/rational.hpp"

namespace mcw {

/// Generalized Laguerre polynomial in the standard (ordinary) normalization:
///   L[n,beta](z) = sum_{m=0}^{n} (-1)^m binom(n+beta, n-m) z^m / m!
/// Degree exactly n, leading coefficient (-1)^n / n!.
Poly laguerre(int n, const Rational& beta);

/// laguerre(n, beta) for n >= 0, the zero polynomial for n < 0. Truncation
/// helper for expansions whose lower indices run negative.
Poly laguerre_or_zero(int n, const Rational& beta);

/// Rodrigues-form consistency: d^n(z^{beta+n} e^{-z}) divided by e^{-z} z^beta
/// must equal n! * laguerre(n, beta).
bool rodrigues_check(int n, const Rational& beta);

}  // namespace mcw
