#include "mcw/measure.hpp"

#include <stdexcept>

#include "mcw/binomial.hpp"
#include "mcw/errors.hpp"
#include "mcw/laguerre.hpp"

namespace mcw {

bool is_admissible(int s, const Rational& beta) { return s >= 0 && beta - s > -1; }

void require_admissible(int s, const Rational& beta) {
  if (!is_admissible(s, beta)) {
    throw IntegrabilityError("measure parameters outside admissible domain: s = " +
                             std::to_string(s) + ", beta = " + to_string(beta) +
                             " (need s >= 0 and beta - s > -1)");
  }
}

WeightedExpr density(int s, const Rational& beta) {
  require_admissible(s, beta);
  WeightedExpr w = WeightedExpr::make(Rational(-2), beta, Poly::one());
  for (int k = 0; k < s; ++k) w = weighted_derivative(w);
  const Rational sign = s % 2 == 0 ? 1 : -1;
  return WeightedExpr::make(w.rate + 1, w.power, w.poly * sign);
}

WeightedExpr density_closed_form(int s, const Rational& beta) {
  require_admissible(s, beta);
  const Rational sign_factorial = (s % 2 == 0 ? Rational(1) : Rational(-1)) * Rational(factorial(s));
  const Poly scaled_laguerre = laguerre(s, beta - s).scale_argument(Rational(2));
  return WeightedExpr::make(Rational(-1), beta - s, scaled_laguerre * sign_factorial);
}

std::vector<ReductionTerm> monomial_reduction(int n, int s, const Rational& beta) {
  if (n < 0) throw std::invalid_argument("monomial_reduction: negative power");
  (void)beta;  // the reduction coefficients do not depend on beta
  std::vector<ReductionTerm> terms;
  terms.reserve(static_cast<std::size_t>(n) + 1);
  for (int p = 0; p <= n; ++p) {
    terms.push_back({p, general_binomial(Rational(n), n - p) * falling_factorial(Rational(s), p)});
  }
  return terms;
}

GammaValue moment(int n, int s, const Rational& beta) {
  require_admissible(s, beta);
  if (n < 0) throw std::invalid_argument("moment: negative power");
  Rational total = 0;
  for (const auto& term : monomial_reduction(n, s, beta)) {
    if (term.coeff == 0) continue;
    total += term.coeff * rising_factorial(beta + 1, n - term.p);
  }
  return GammaValue(total, beta);
}

GammaValue inner_product(const Poly& p, const Poly& q, int s, const Rational& beta) {
  require_admissible(s, beta);
  const Poly product = p * q;
  GammaValue total(Rational(0), beta);
  for (int k = 0; k <= product.degree(); ++k) {
    if (product.coefficient(k) == 0) continue;
    total += product.coefficient(k) * moment(k, s, beta);
  }
  return total;
}

}  // namespace mcw
