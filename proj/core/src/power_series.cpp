#include "mcw/power_series.hpp"

#include <algorithm>
#include <stdexcept>

#include "mcw/errors.hpp"

namespace mcw {

PowerSeries::PowerSeries(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("PowerSeries: negative order");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

PowerSeries PowerSeries::one(int order) {
  PowerSeries s(order);
  s.coeffs_[0] = Poly::one();
  return s;
}

PowerSeries PowerSeries::monomial(int order, int k, Poly c) {
  PowerSeries s(order);
  if (k < 0) throw std::invalid_argument("PowerSeries::monomial: negative exponent");
  if (k <= order) s.coeffs_[static_cast<std::size_t>(k)] = std::move(c);
  return s;
}

const Poly& PowerSeries::coefficient(int n) const {
  if (n < 0 || n > order_) {
    throw std::out_of_range("PowerSeries::coefficient: index " + std::to_string(n) +
                            " out of range for order " + std::to_string(order_));
  }
  return coeffs_[static_cast<std::size_t>(n)];
}

void PowerSeries::set_coefficient(int n, Poly c) {
  if (n < 0 || n > order_) throw std::out_of_range("PowerSeries::set_coefficient: out of range");
  coeffs_[static_cast<std::size_t>(n)] = std::move(c);
}

PowerSeries PowerSeries::truncated(int order) const {
  PowerSeries out(std::min(order, order_));
  for (int k = 0; k <= out.order_; ++k) out.coeffs_[static_cast<std::size_t>(k)] = coeffs_[static_cast<std::size_t>(k)];
  return out;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries out(std::min(a.order_, b.order_));
  for (int k = 0; k <= out.order_; ++k) {
    out.coeffs_[static_cast<std::size_t>(k)] =
        a.coeffs_[static_cast<std::size_t>(k)] + b.coeffs_[static_cast<std::size_t>(k)];
  }
  return out;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries out(std::min(a.order_, b.order_));
  for (int k = 0; k <= out.order_; ++k) {
    out.coeffs_[static_cast<std::size_t>(k)] =
        a.coeffs_[static_cast<std::size_t>(k)] - b.coeffs_[static_cast<std::size_t>(k)];
  }
  return out;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries out(std::min(a.order_, b.order_));
  for (int i = 0; i <= out.order_; ++i) {
    if (a.coeffs_[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; i + j <= out.order_; ++j) {
      if (b.coeffs_[static_cast<std::size_t>(j)].is_zero()) continue;
      out.coeffs_[static_cast<std::size_t>(i + j)] +=
          a.coeffs_[static_cast<std::size_t>(i)] * b.coeffs_[static_cast<std::size_t>(j)];
    }
  }
  return out;
}

PowerSeries PowerSeries::differentiate_in_z() const {
  PowerSeries out(order_);
  for (int k = 0; k <= order_; ++k) {
    out.coeffs_[static_cast<std::size_t>(k)] = coeffs_[static_cast<std::size_t>(k)].derivative();
  }
  return out;
}

PowerSeries exp_series(const PowerSeries& u) {
  if (!u.coefficient(0).is_zero()) {
    throw SeriesDomainError("exp_series: argument has nonzero constant term");
  }
  const int order = u.order();
  PowerSeries result = PowerSeries::one(order);
  PowerSeries term = PowerSeries::one(order);  // u^k / k!
  for (int k = 1; k <= order; ++k) {
    term = term * u;
    PowerSeries scaled(order);
    for (int j = 0; j <= order; ++j) scaled.set_coefficient(j, term.coefficient(j) * Rational(1, k));
    term = scaled;
    result = result + term;
  }
  return result;
}

PowerSeries binomial_series(const PowerSeries& u, const Rational& gamma) {
  if (!u.coefficient(0).is_zero()) {
    throw SeriesDomainError("binomial_series: argument has nonzero constant term");
  }
  const int order = u.order();
  PowerSeries result = PowerSeries::one(order);
  PowerSeries term = PowerSeries::one(order);  // binom(gamma, k) u^k
  for (int k = 1; k <= order; ++k) {
    term = term * u;
    const Rational factor = (gamma - (k - 1)) / k;
    PowerSeries scaled(order);
    for (int j = 0; j <= order; ++j) scaled.set_coefficient(j, term.coefficient(j) * factor);
    term = scaled;
    result = result + term;
  }
  return result;
}

}  // namespace mcw
