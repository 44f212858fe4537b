#include "mcw/deformation.hpp"

#include <stdexcept>

#include "mcw/binomial.hpp"
#include "mcw/laguerre.hpp"

namespace mcw {

namespace {

// A p = s * sum_{m>=1} (alpha^m / m) p^{(m)}. Nilpotent: lowers degree.
Poly apply_generator(const Poly& p, const Rational& s, int alpha) {
  Poly out;
  Poly d = p.derivative();
  Rational alpha_pow = alpha;
  for (int m = 1; !d.is_zero(); ++m) {
    out += d * (s * alpha_pow / m);
    d = d.derivative();
    alpha_pow *= alpha;
  }
  return out;
}

}  // namespace

Poly apply_deformation(const Poly& p, const Rational& s, Alpha alpha) {
  if (s == 0 || p.is_zero()) return p;
  const int a = static_cast<int>(alpha);
  Poly result = p;
  Poly term = p;  // A^k p / k!
  for (int k = 1; ; ++k) {
    term = apply_generator(term, s, a) * Rational(1, k);
    if (term.is_zero()) break;
    result += term;
  }
  return result;
}

Poly m_poly(int n, const Rational& beta, const Rational& s) {
  return apply_deformation(laguerre(n, beta), s, Alpha::minus);
}

Poly m_expansion(int n, const Rational& beta, const Rational& s) {
  if (n < 0) throw std::invalid_argument("m_expansion: negative degree");
  Poly out;
  Rational coeff = 1;  // 2^k (s)_k / k!
  for (int k = 0; k <= n; ++k) {
    if (coeff != 0) out += laguerre_or_zero(n - k, beta - s) * coeff;
    coeff *= Rational(2) * (s + k) / (k + 1);
  }
  return out;
}

bool shift_identity_check(int n, const Rational& beta, const Rational& s) {
  return apply_deformation(laguerre(n, beta), s, Alpha::plus) == laguerre(n, beta - s);
}

Poly combined_deformation(const Poly& p, const Rational& s, CombineVariant variant) {
  // ((-1)^m + 1) splits as the alpha=-1 part composed with the alpha=+1 part;
  // ((-1)^m - 1) composes alpha=-1 with the inverse (-s) of the alpha=+1 part.
  const Rational plus_strength = variant == CombineVariant::plus ? s : -s;
  return apply_deformation(apply_deformation(p, plus_strength, Alpha::plus), s, Alpha::minus);
}

bool m_derivative_recursion_check(int n, const Rational& beta, const Rational& s) {
  if (n < 1) throw std::invalid_argument("m_derivative_recursion_check: n must be >= 1");
  Poly d = m_poly(n, beta, s);
  Rational sign = 1;
  for (int m = 1; m <= n; ++m) {
    d = d.derivative();
    sign = -sign;
    if (d != m_poly(n - m, beta + m, s) * sign) return false;
  }
  return true;
}

Poly transition(int n, const Rational& beta, const Rational& s, const Rational& s_prime) {
  if (n < 0) throw std::invalid_argument("transition: negative degree");
  const Rational sigma = s_prime - s;
  Poly out;
  Rational coeff = 1;  // 2^k (s'-s)_k / k!
  for (int k = 0; k <= n; ++k) {
    if (coeff != 0) out += m_poly(n - k, beta - sigma, s) * coeff;
    coeff *= Rational(2) * (sigma + k) / (k + 1);
  }
  return out;
}

bool inverse_connection_check(int n, const Rational& beta, const Rational& s,
                              const Rational& s_prime) {
  const Poly m = m_poly(n, beta, s);
  if (apply_deformation(m, -s, Alpha::minus) != laguerre(n, beta)) return false;
  return apply_deformation(m, s_prime, Alpha::minus) == m_poly(n, beta, s + s_prime);
}

OdeSides ode_residual(int n, const Rational& beta, const Rational& s, OdeFirstOrderSign sign) {
  if (n < 0) throw std::invalid_argument("ode_residual: negative degree");
  const Poly m = m_poly(n, beta, s);
  const Poly mp = m.derivative();
  const Poly z = Poly::z();
  const Rational first_order =
      beta + (sign == OdeFirstOrderSign::minus ? -s : s) + 1;
  Poly lhs = z * mp.derivative();
  lhs += mp * first_order;
  lhs -= z * mp;
  lhs += m * Rational(n);

  Poly rhs;
  Poly d = m;
  Rational factor = -2 * s;  // 2s * (-1)^m
  for (int order = 1; order <= n; ++order) {
    d = d.derivative();
    rhs += d * factor;
    factor = -factor;
  }
  return {std::move(lhs), std::move(rhs)};
}

Poly ode_inhomogeneous_recursion_image(int n, const Rational& beta, const Rational& s) {
  Poly out;
  for (int m = 1; m <= n; ++m) out += m_poly(n - m, beta + m, s) * (2 * s);
  return out;
}

bool commutator_identity_check(const Rational& s, Alpha alpha, const Poly& p) {
  const Poly z = Poly::z();
  const Poly lhs = apply_deformation(z * p, s, alpha) - z * apply_deformation(p, s, alpha);
  const Poly image = apply_deformation(p, s, alpha);
  Poly rhs;
  Poly d = image;  // d^{m-1}(E p), starting at m = 1
  Rational alpha_pow = static_cast<int>(alpha);
  while (!d.is_zero()) {
    rhs += d * (s * alpha_pow);
    d = d.derivative();
    alpha_pow *= static_cast<int>(alpha);
  }
  return lhs == rhs;
}

}  // namespace mcw
