#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "mcw/rational.hpp"

namespace mcw {

/// Dense univariate polynomial in z over Rational. coefficient(k) is the
/// coefficient of z^k. Stored trimmed: the top stored coefficient is nonzero
/// unless the polynomial is zero (empty storage). Immutable-value style:
/// all operations return new polynomials.
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<Rational> ascending_coeffs);
  static Poly from_coefficients(std::vector<Rational> ascending_coeffs);
  static Poly zero() { return Poly(); }
  static Poly one() { return Poly({Rational(1)}); }
  static Poly z() { return Poly({Rational(0), Rational(1)}); }
  /// c * z^k
  static Poly monomial(const Rational& c, int k);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Zero beyond the degree.
  const Rational& coefficient(int k) const;
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  const Rational& leading_coefficient() const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c);
  friend Poly operator*(const Rational& c, Poly a) { return std::move(a) * c; }
  friend Poly operator-(Poly a) { return std::move(a) * Rational(-1); }
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  Poly derivative() const;
  Rational evaluate(const Rational& z) const;
  /// p(z + c) (exact Taylor shift).
  Poly shift_argument(const Rational& c) const;
  /// p(c * z).
  Poly scale_argument(const Rational& c) const;
  /// p(z) * z^k, k >= 0.
  Poly shift_up(int k) const;

  std::string str() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace mcw
