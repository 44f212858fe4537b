#include "mcw/weighted_expr.hpp"

namespace mcw {

WeightedExpr WeightedExpr::make(Rational rate, Rational power, Poly poly) {
  if (poly.is_zero()) return WeightedExpr{std::move(rate), Rational(0), Poly()};
  int shift = 0;
  while (poly.coefficient(shift) == 0) ++shift;
  if (shift > 0) {
    std::vector<Rational> coeffs(poly.coefficients().begin() + shift, poly.coefficients().end());
    poly = Poly::from_coefficients(std::move(coeffs));
    power += shift;
  }
  return WeightedExpr{std::move(rate), std::move(power), std::move(poly)};
}

WeightedExpr weighted_derivative(const WeightedExpr& w) {
  const Poly z = Poly::z();
  Poly p = z * w.poly * w.rate;
  p += w.poly * w.power;
  p += z * w.poly.derivative();
  return WeightedExpr::make(w.rate, w.power - 1, std::move(p));
}

std::string WeightedExpr::str() const {
  return "e^(" + to_string(rate) + " z) * z^(" + to_string(power) + ") * [" + poly.str() + "]";
}

}  // namespace mcw
