#include "mcw/generating.hpp"

namespace mcw {

namespace {

// (-z) * (t + t^2 + ... + t^N): the exponent of e^{-zt/(1-t)}, zero constant
// term by construction so exp_series stays exact.
PowerSeries exponent_series(int order) {
  PowerSeries u(order);
  const Poly minus_z{Rational(0), Rational(-1)};
  for (int k = 1; k <= order; ++k) u.set_coefficient(k, minus_z);
  return u;
}

PowerSeries minus_t(int order, const Rational& scale) {
  return PowerSeries::monomial(order, 1, Poly({-scale}));
}

}  // namespace

PowerSeries laguerre_series(const Rational& beta, int order) {
  const PowerSeries exp_part = exp_series(exponent_series(order));
  const PowerSeries pole_part = binomial_series(minus_t(order, 1), -(beta + 1));
  return exp_part * pole_part;
}

PowerSeries m_series(const Rational& beta, const Rational& s, int order) {
  const PowerSeries exp_part = exp_series(exponent_series(order));
  const PowerSeries pole_part = binomial_series(minus_t(order, 1), -(beta - s + 1));
  const PowerSeries deform_part = binomial_series(minus_t(order, 2), -s);
  return exp_part * pole_part * deform_part;
}

bool dz_relation_check(const Rational& beta, int order) {
  const PowerSeries lhs = laguerre_series(beta, order).differentiate_in_z();
  const PowerSeries shifted =
      PowerSeries::monomial(order, 1, Poly({Rational(-1)})) * laguerre_series(beta + 1, order);
  return lhs == shifted;
}

bool m_series_factor_check(const Rational& beta, const Rational& s, int order) {
  const PowerSeries factor = binomial_series(minus_t(order, 2), -s) *
                             binomial_series(minus_t(order, 1), s);
  return m_series(beta, s, order) == factor * laguerre_series(beta, order);
}

}  // namespace mcw
