#include "mcw/gram.hpp"

#include <stdexcept>

#include "mcw/deformation.hpp"
#include "mcw/errors.hpp"
#include "mcw/exact_linalg.hpp"
#include "mcw/laguerre.hpp"
#include "mcw/measure.hpp"

namespace mcw {

namespace {

std::vector<Poly> m_family(int nmax, int s, const Rational& beta) {
  std::vector<Poly> family;
  family.reserve(static_cast<std::size_t>(nmax) + 1);
  for (int k = 0; k <= nmax; ++k) family.push_back(m_poly(k, beta, s));
  return family;
}

[[noreturn]] void throw_degenerate(int n, int s, const Rational& beta) {
  throw DegenerateGramError("singular Gram block at n = " + std::to_string(n) +
                            ", s = " + std::to_string(s) + ", beta = " + to_string(beta));
}

}  // namespace

GramSystem gram_system(int n, int s, const Rational& beta) {
  if (n < 1) throw std::invalid_argument("gram_system: n must be >= 1");
  require_admissible(s, beta);
  const std::vector<Poly> m = m_family(n, s, beta);
  GramSystem system{n, s, beta, {}, {}};
  system.matrix.reserve(static_cast<std::size_t>(n) - 1);
  for (int i = 1; i < n; ++i) {
    std::vector<GammaValue> row;
    row.reserve(static_cast<std::size_t>(n) - 1);
    for (int j = 1; j < n; ++j) {
      if (j < i) {
        row.push_back(system.matrix[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)]);
      } else {
        row.push_back(inner_product(m[static_cast<std::size_t>(i)], m[static_cast<std::size_t>(j)], s, beta));
      }
    }
    system.matrix.push_back(std::move(row));
  }
  system.target.reserve(static_cast<std::size_t>(n) - 1);
  for (int j = 1; j < n; ++j) {
    system.target.push_back(inner_product(m[static_cast<std::size_t>(n)], m[static_cast<std::size_t>(j)], s, beta));
  }
  return system;
}

std::vector<Rational> weights(int n, int s, const Rational& beta) {
  if (n < 1) throw std::invalid_argument("weights: n must be >= 1");
  if (n == 1) return {Rational(1)};
  const GramSystem system = gram_system(n, s, beta);
  const std::size_t dim = static_cast<std::size_t>(n) - 1;
  // Gamma(beta+1) factors out of every entry; solve on the rational parts.
  // Unknown y_k = w_{n-k}: sum_k <M_j, M_k> y_k = -<M_j, M_n>.
  RationalMatrix a(dim);
  std::vector<Rational> rhs(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    a[j].reserve(dim);
    for (std::size_t k = 0; k < dim; ++k) a[j].push_back(system.matrix[j][k].coeff());
    rhs[j] = -system.target[j].coeff();
  }
  const auto y = solve_linear_system(a, rhs);
  if (!y) throw_degenerate(n, s, beta);
  std::vector<Rational> w(static_cast<std::size_t>(n));
  w[0] = 1;
  for (int k = 1; k < n; ++k) w[static_cast<std::size_t>(n - k)] = (*y)[static_cast<std::size_t>(k - 1)];
  return w;
}

std::vector<Rational> weights_by_determinants(int n, int s, const Rational& beta) {
  if (n < 1) throw std::invalid_argument("weights_by_determinants: n must be >= 1");
  if (n == 1) return {Rational(1)};
  const GramSystem system = gram_system(n, s, beta);
  const std::size_t dim = static_cast<std::size_t>(n) - 1;
  // Reversed-column layout: column c (1-based) holds <M_j, M_{n-c}>.
  RationalMatrix base(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    base[j].reserve(dim);
    for (std::size_t c = 1; c <= dim; ++c) {
      base[j].push_back(system.matrix[j][static_cast<std::size_t>(n) - 1 - c].coeff());
    }
  }
  const Rational delta = determinant(base);
  if (delta == 0) throw_degenerate(n, s, beta);
  std::vector<Rational> w(static_cast<std::size_t>(n));
  w[0] = 1;
  for (std::size_t i = 1; i <= dim; ++i) {
    RationalMatrix inserted = base;
    for (std::size_t j = 0; j < dim; ++j) inserted[j][i - 1] = system.target[j].coeff();
    w[i] = -determinant(inserted) / delta;
  }
  return w;
}

Poly c_poly(int n, int s, const Rational& beta) {
  if (n < 0) throw std::invalid_argument("c_poly: negative degree");
  if (n == 0) return Poly::one();
  const std::vector<Rational> w = weights(n, s, beta);
  Poly out;
  for (int i = 0; i < n; ++i) out += m_poly(n - i, beta, s) * w[static_cast<std::size_t>(i)];
  return out;
}

Poly w_poly(int n, int s, const Rational& beta) {
  if (n < 0) throw std::invalid_argument("w_poly: negative degree");
  if (n == 0) return Poly::one();
  const std::vector<Rational> w = weights(n, s, beta);
  Poly out;
  for (int i = 0; i < n; ++i) out += laguerre(n - i, beta) * w[static_cast<std::size_t>(i)];
  return out;
}

std::vector<OrthogonalityEntry> orthogonality_report(int nmax, int s, const Rational& beta) {
  if (nmax < 1) throw std::invalid_argument("orthogonality_report: nmax must be >= 1");
  const std::vector<Poly> m = m_family(nmax, s, beta);
  std::vector<Poly> c;
  c.reserve(static_cast<std::size_t>(nmax) + 1);
  for (int k = 0; k <= nmax; ++k) c.push_back(c_poly(k, s, beta));
  std::vector<OrthogonalityEntry> report;
  for (int n = 1; n <= nmax; ++n) {
    for (int j = 0; j < n; ++j) {
      report.push_back({OrthogonalityEntry::Kind::against_m, n, j,
                        inner_product(c[static_cast<std::size_t>(n)], m[static_cast<std::size_t>(j)], s, beta)});
    }
    for (int mm = 0; mm < n; ++mm) {
      report.push_back({OrthogonalityEntry::Kind::against_c, n, mm,
                        inner_product(c[static_cast<std::size_t>(n)], c[static_cast<std::size_t>(mm)], s, beta)});
    }
  }
  for (int n = 0; n <= nmax; ++n) {
    report.push_back({OrthogonalityEntry::Kind::norm, n, n,
                      inner_product(c[static_cast<std::size_t>(n)], c[static_cast<std::size_t>(n)], s, beta)});
  }
  return report;
}

}  // namespace mcw
