#pragma once

#include <vector>

#include "mcw/gamma_value.hpp"
#include "mcw/polynomial.hpp"
#include "mcw/rational.hpp"
#include "mcw/weighted_expr.hpp"

namespace mcw {

/// Throws IntegrabilityError unless s >= 0 and beta - s > -1. The constraint
/// is stronger than origin-integrability: for integer beta <= s-1 the
/// integral of the density exists but no longer equals Gamma(beta+1), because
/// the boundary terms of the defining integration by parts stop vanishing.
void require_admissible(int s, const Rational& beta);

bool is_admissible(int s, const Rational& beta);

/// Sign-indefinite density D[s,beta](z) = (-1)^s e^{z} d^s/dz^s (e^{-2z} z^beta),
/// built by s exact product-rule steps. Result has rate -1 and canonical
/// power beta - s on the admissible domain.
WeightedExpr density(int s, const Rational& beta);

/// Laguerre closed form of the same density:
///   D[s,beta](z) = (-1)^s s! z^{beta-s} e^{-z} L[s, beta-s](2z).
/// Agrees with density() exactly.
WeightedExpr density_closed_form(int s, const Rational& beta);

/// One term of the monomial reduction
///   z^n D[s,beta] = sum_p binom(n, n-p) (s)_p^falling D[s-p, beta+n-p];
/// coeff vanishes automatically when p > s, keeping indices well formed.
struct ReductionTerm {
  int p;
  Rational coeff;
};
std::vector<ReductionTerm> monomial_reduction(int n, int s, const Rational& beta);

/// Exact integral of z^n D[s,beta] over (0, inf) as a rational multiple of
/// Gamma(beta+1). moment(0, s, beta) = Gamma(beta+1) for every admissible s.
GammaValue moment(int n, int s, const Rational& beta);

/// Bilinear, symmetric moment functional: integral of p*q against D[s,beta].
GammaValue inner_product(const Poly& p, const Poly& q, int s, const Rational& beta);

}  // namespace mcw
