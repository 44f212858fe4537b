#pragma once

#include "mcw/polynomial.hpp"
#include "mcw/rational.hpp"

namespace mcw {

/// Sign choice alpha = +/-1 inside the deformation operator
/// exp[s * sum_{m>=1} (alpha^m / m) d^m/dz^m].
enum class Alpha : int { plus = +1, minus = -1 };

/// Applies the deformation operator exactly. The operator is degree-lowering
/// on the summand level, so the outer exponential truncates after deg(p)+1
/// terms: result = sum_{k<=deg} A^k p / k! with A = s sum_m (alpha^m/m) d^m.
/// Degree and leading coefficient are preserved; s may be any rational.
Poly apply_deformation(const Poly& p, const Rational& s, Alpha alpha);

/// M[n,beta]^s = apply_deformation(laguerre(n,beta), s, minus). M[0]^s = 1.
Poly m_poly(int n, const Rational& beta, const Rational& s);

/// Explicit Laguerre expansion of the same family:
///   M[n,beta]^s = sum_{k=0}^{n} 2^k (s)_k / k! * L[n-k, beta-s].
/// Must agree with m_poly exactly.
Poly m_expansion(int n, const Rational& beta, const Rational& s);

/// alpha = +1 only shifts the parameter:
/// apply_deformation(L[n,beta], s, plus) == L[n, beta-s].
bool shift_identity_check(int n, const Rational& beta, const Rational& s);

/// Combined +/- deformations. plus applies exp[s sum ((-1)^m + 1) d_m/m]
/// (image of L[n,beta] is M[n,beta-s]^s), minus applies
/// exp[s sum ((-1)^m - 1) d_m/m] (image is M[n,beta+s]^s).
enum class CombineVariant { plus, minus };
Poly combined_deformation(const Poly& p, const Rational& s, CombineVariant variant);

/// d^m/dz^m M[n,beta]^s = (-1)^m M[n-m, beta+m]^s for 1 <= m <= n.
bool m_derivative_recursion_check(int n, const Rational& beta, const Rational& s);

/// Strength-transition expansion:
///   M[n,beta]^{s'} = sum_{k=0}^{n} 2^k (s'-s)_k / k! * M[n-k, beta-s'+s]^s.
Poly transition(int n, const Rational& beta, const Rational& s, const Rational& s_prime);

/// exp(-s Sum) M^s = L and exp(s' Sum) M^s = M^{s+s'}.
bool inverse_connection_check(int n, const Rational& beta, const Rational& s,
                              const Rational& s_prime);

/// Sign of s in the first-derivative coefficient of the M differential
/// equation. `minus` is the correct equation; `plus` is the fault-injection
/// variant used to demonstrate that the sign matters.
enum class OdeFirstOrderSign { minus, plus };

struct OdeSides {
  Poly lhs;  // z M'' + (beta -/+ s + 1 - z) M' + n M
  Poly rhs;  // 2s sum_{m=1}^{n} (-1)^m d^m M
};

/// Both sides of the inhomogeneous equation for M[n,beta]^s. With the minus
/// sign lhs == rhs exactly; M[0]^s gives (0, 0); s = 0 reduces to the
/// homogeneous Laguerre equation.
OdeSides ode_residual(int n, const Rational& beta, const Rational& s,
                      OdeFirstOrderSign sign = OdeFirstOrderSign::minus);

/// The inhomogeneous side rewritten through the derivative recursion:
/// 2s sum_{m=1}^{n} M[n-m, beta+m]^s. Must equal OdeSides::rhs.
Poly ode_inhomogeneous_recursion_image(int n, const Rational& beta, const Rational& s);

/// [exp(s Sum_alpha), z] = s sum_{m>=1} alpha^m d^{m-1} exp(s Sum_alpha),
/// checked on the concrete polynomial p.
bool commutator_identity_check(const Rational& s, Alpha alpha, const Poly& p);

}  // namespace mcw
