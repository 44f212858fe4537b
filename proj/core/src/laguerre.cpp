#include "mcw/laguerre.hpp"

#include <stdexcept>

#include "mcw/binomial.hpp"
#include "mcw/weighted_expr.hpp"

namespace mcw {

Poly laguerre(int n, const Rational& beta) {
  if (n < 0) throw std::invalid_argument("laguerre: negative degree");
  std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
  Rational sign = 1;
  Rational inv_mfact = 1;
  for (int m = 0; m <= n; ++m) {
    coeffs[static_cast<std::size_t>(m)] = sign * general_binomial(n + beta, n - m) * inv_mfact;
    sign = -sign;
    inv_mfact /= m + 1;
  }
  return Poly::from_coefficients(std::move(coeffs));
}

Poly laguerre_or_zero(int n, const Rational& beta) {
  return n < 0 ? Poly::zero() : laguerre(n, beta);
}

bool rodrigues_check(int n, const Rational& beta) {
  if (n < 0) throw std::invalid_argument("rodrigues_check: negative degree");
  WeightedExpr w = WeightedExpr::make(Rational(-1), beta + n, Poly::one());
  for (int k = 0; k < n; ++k) w = weighted_derivative(w);
  // Compare w.poly * z^{w.power} against n! L[n,beta] * z^beta without
  // assuming the canonical power landed exactly on beta.
  const Rational excess = w.power - beta;
  if (!is_integer(excess) || excess < 0) return false;
  const Poly lhs = w.poly.shift_up(static_cast<int>(to_long(excess)));
  const Poly expected = laguerre(n, beta) * Rational(factorial(n));
  return w.rate == Rational(-1) && lhs == expected;
}

}  // namespace mcw
