#pragma once

#include <stdexcept>
#include <string>

#include "mcw/binomial.hpp"
#include "mcw/rational.hpp"

namespace mcw {

/// Exact scalar of the form coeff * Gamma(beta + 1). Every integral against
/// the measure reduces to this shape, so no Gamma value is ever evaluated
/// in exact arithmetic. Addition requires matching beta bases.
class GammaValue {
 public:
  GammaValue(Rational coeff, Rational beta)
      : coeff_(std::move(coeff)), beta_(std::move(beta)) {}

  const Rational& coeff() const noexcept { return coeff_; }
  const Rational& beta() const noexcept { return beta_; }
  bool is_zero() const noexcept { return coeff_ == 0; }

  GammaValue& operator+=(const GammaValue& other) {
    require_same_base(other);
    coeff_ += other.coeff_;
    return *this;
  }
  GammaValue& operator-=(const GammaValue& other) {
    require_same_base(other);
    coeff_ -= other.coeff_;
    return *this;
  }
  friend GammaValue operator+(GammaValue a, const GammaValue& b) { return a += b; }
  friend GammaValue operator-(GammaValue a, const GammaValue& b) { return a -= b; }
  friend GammaValue operator*(GammaValue a, const Rational& c) {
    a.coeff_ *= c;
    return a;
  }
  friend GammaValue operator*(const Rational& c, GammaValue a) {
    a.coeff_ *= c;
    return a;
  }
  friend bool operator==(const GammaValue& a, const GammaValue& b) {
    return a.coeff_ == b.coeff_ && (a.coeff_ == 0 || a.beta_ == b.beta_);
  }

  std::string str() const {
    return to_string(coeff_) + " * Gamma(" + to_string(Rational(beta_ + 1)) + ")";
  }

 private:
  void require_same_base(const GammaValue& other) const {
    if (beta_ != other.beta_) {
      throw std::invalid_argument("GammaValue: mixed Gamma bases " + to_string(beta_) +
                                  " vs " + to_string(other.beta_));
    }
  }

  Rational coeff_;
  Rational beta_;
};

/// Gamma(beta + m + 1) reduced to the canonical base:
/// (beta+1)_m * Gamma(beta+1). m >= 0 keeps the reduction pole-free.
inline GammaValue gamma_shift(const Rational& beta, int m) {
  if (m < 0) throw std::invalid_argument("gamma_shift: negative shift");
  return GammaValue(rising_factorial(beta + 1, m), beta);
}

}  // namespace mcw
