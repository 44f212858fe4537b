#pragma once

#include "mcw/power_series.hpp"
#include "mcw/rational.hpp"

namespace mcw {

/// Closed-form Laguerre generating function expanded to the given order:
///   e^{-z t / (1-t)} / (1-t)^{beta+1} = sum_n L[n,beta](z) t^n.
PowerSeries laguerre_series(const Rational& beta, int order);

/// Deformed generating function (ordinary convention, no 1/n!):
///   e^{-z t / (1-t)} / (1-t)^{beta-s+1} * (1-2t)^{-s} = sum_n M[n,beta]^s t^n.
PowerSeries m_series(const Rational& beta, const Rational& s, int order);

/// d/dz L(z,t,beta) = -t L(z,t,beta+1), exactly modulo t^{N+1}.
bool dz_relation_check(const Rational& beta, int order);

/// M-series factorizes over the L-series:
///   m_series(beta, s) = ((1-2t)/(1-t))^{-s} * laguerre_series(beta).
bool m_series_factor_check(const Rational& beta, const Rational& s, int order);

}  // namespace mcw
