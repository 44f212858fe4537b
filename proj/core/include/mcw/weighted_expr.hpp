#pragma once

#include <string>

#include "mcw/polynomial.hpp"
#include "mcw/rational.hpp"

namespace mcw {

/// e^{rate z} * z^power * poly(z). Canonical form absorbs z-multiplicities of
/// the polynomial factor into the power: poly(0) != 0 unless poly = 0.
/// Hosts the measure and the Rodrigues-form intermediates.
struct WeightedExpr {
  Rational rate;
  Rational power;
  Poly poly;

  static WeightedExpr make(Rational rate, Rational power, Poly poly);

  friend bool operator==(const WeightedExpr& a, const WeightedExpr& b) {
    if (a.poly.is_zero() && b.poly.is_zero()) return true;
    return a.rate == b.rate && a.power == b.power && a.poly == b.poly;
  }

  std::string str() const;
};

/// Exact d/dz: e^{az} z^{g-1} (a z p + g p + z p'), re-canonicalized.
WeightedExpr weighted_derivative(const WeightedExpr& w);

}  // namespace mcw
