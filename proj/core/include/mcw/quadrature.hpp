#pragma once

#include <functional>

#include "mcw/gamma_value.hpp"
#include "mcw/polynomial.hpp"
#include "mcw/rational.hpp"
#include "mcw/weighted_expr.hpp"

namespace mcw {

/// Result of an adaptive quadrature. `reliable` is false when the subdivision
/// cap was hit before the tolerance was met; the value is still the best
/// estimate but must not be trusted silently.
struct QuadratureResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  int subdivisions = 0;
  bool reliable = true;
};

struct QuadratureOptions {
  double rel_tol = 1e-10;
  int max_panels = 1 << 14;
};

/// Adaptive Gauss-Kronrod 7/15 on a finite interval. Panel arithmetic runs in
/// long double; the reported error includes a roundoff floor proportional to
/// the L1 mass, so cancellation-heavy integrands cannot claim spurious
/// accuracy.
QuadratureResult adaptive_integrate(const std::function<long double(long double)>& f,
                                    long double a, long double b, double abs_tol,
                                    const QuadratureOptions& options = {});

/// Floating-point density evaluation via the Laguerre closed form. The
/// derivative-route WeightedExpr evaluates through eval_weighted; the two
/// float paths agree to ~1e-12 relative on [0.01, 50].
double eval_density(int s, const Rational& beta, double z);

/// Generic float evaluation of e^{rate z} z^power poly(z).
double eval_weighted(const WeightedExpr& w, double z);

/// Numerical integral of z^n D[s,beta] over (0, inf): split at z = 1, with a
/// power substitution taming the z^{beta-s} endpoint and a certified
/// exponential tail cutoff. Oracle for measure::moment.
QuadratureResult quad_moment(int n, int s, const Rational& beta, double tol,
                             const QuadratureOptions& options = {});

/// Numerical integral of p q D[s,beta]; oracle for measure::inner_product.
QuadratureResult quad_inner_product(const Poly& p, const Poly& q, int s, const Rational& beta,
                                    double tol, const QuadratureOptions& options = {});

/// Float value of an exact coeff * Gamma(beta+1) scalar.
double gamma_value_to_double(const GammaValue& value);

}  // namespace mcw
