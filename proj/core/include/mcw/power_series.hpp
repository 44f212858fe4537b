#pragma once

#include <vector>

#include "mcw/polynomial.hpp"
#include "mcw/rational.hpp"

namespace mcw {

/// Formal power series in t, truncated at order N, with Poly coefficients in
/// z. All arithmetic is exact modulo t^{N+1}; binary operations truncate to
/// the smaller order first.
class PowerSeries {
 public:
  explicit PowerSeries(int order);
  static PowerSeries one(int order);
  /// c(z) * t^k.
  static PowerSeries monomial(int order, int k, Poly c);

  int order() const noexcept { return order_; }
  /// Throws std::out_of_range for n > order.
  const Poly& coefficient(int n) const;
  void set_coefficient(int n, Poly c);

  PowerSeries truncated(int order) const;

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

  /// d/dz applied to every coefficient.
  PowerSeries differentiate_in_z() const;

 private:
  int order_;
  std::vector<Poly> coeffs_;  // size order_+1
};

/// exp(u) for a series with zero constant term (throws SeriesDomainError
/// otherwise); exact because u is nilpotent modulo t^{N+1}.
PowerSeries exp_series(const PowerSeries& u);

/// (1 + u)^gamma for rational gamma; same zero-constant-term requirement.
PowerSeries binomial_series(const PowerSeries& u, const Rational& gamma);

}  // namespace mcw
