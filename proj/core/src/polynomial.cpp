#include "mcw/polynomial.hpp"

#include <stdexcept>

namespace mcw {

namespace {
const Rational kZero(0);
}

Poly::Poly(std::initializer_list<Rational> ascending_coeffs) : coeffs_(ascending_coeffs) {
  trim();
}

Poly Poly::from_coefficients(std::vector<Rational> ascending_coeffs) {
  Poly p;
  p.coeffs_ = std::move(ascending_coeffs);
  p.trim();
  return p;
}

Poly Poly::monomial(const Rational& c, int k) {
  if (k < 0) throw std::invalid_argument("Poly::monomial: negative exponent");
  std::vector<Rational> coeffs(static_cast<std::size_t>(k) + 1, Rational(0));
  coeffs.back() = c;
  return from_coefficients(std::move(coeffs));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& Poly::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[static_cast<std::size_t>(k)];
}

const Rational& Poly::leading_coefficient() const {
  if (coeffs_.empty()) return kZero;
  return coeffs_.back();
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Poly::from_coefficients(std::move(out));
}

Poly operator*(Poly a, const Rational& c) {
  if (c == 0) return Poly();
  for (auto& coeff : a.coeffs_) coeff *= c;
  return a;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly();
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    out[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
  }
  return from_coefficients(std::move(out));
}

Rational Poly::evaluate(const Rational& z) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Poly Poly::shift_argument(const Rational& c) const {
  // Horner in the shifted variable: result = (...((a_d)(z+c) + a_{d-1})(z+c) + ...).
  Poly result;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    Poly next = result.shift_up(1);
    next += result * c;
    next += Poly({*it});
    result = std::move(next);
  }
  return result;
}

Poly Poly::scale_argument(const Rational& c) const {
  std::vector<Rational> out(coeffs_.size());
  Rational power = 1;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    out[k] = coeffs_[k] * power;
    power *= c;
  }
  return from_coefficients(std::move(out));
}

Poly Poly::shift_up(int k) const {
  if (k < 0) throw std::invalid_argument("Poly::shift_up: negative shift");
  if (is_zero() || k == 0) return *this;
  std::vector<Rational> out(static_cast<std::size_t>(k), Rational(0));
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return from_coefficients(std::move(out));
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    if (!out.empty()) out += " + ";
    out += "(" + to_string(coeffs_[k]) + ")";
    if (k == 1) out += "*z";
    if (k > 1) out += "*z^" + std::to_string(k);
  }
  return out;
}

}  // namespace mcw
