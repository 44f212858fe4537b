#include "mcw/exact_linalg.hpp"

#include <stdexcept>

namespace mcw {

namespace {

using IntMatrix = std::vector<std::vector<Integer>>;

// Clears denominators row by row; returns the integer matrix and the product
// of the row multipliers (for determinant rescaling).
IntMatrix clear_denominators(const RationalMatrix& matrix, Rational& row_scale_product) {
  IntMatrix out(matrix.size());
  row_scale_product = 1;
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    Integer common = 1;
    for (const auto& entry : matrix[i]) common = lcm(common, denominator(entry));
    row_scale_product *= Rational(common);
    out[i].reserve(matrix[i].size());
    for (const auto& entry : matrix[i]) {
      out[i].push_back(numerator(entry) * (common / denominator(entry)));
    }
  }
  return out;
}

// Bareiss fraction-free forward elimination. Returns the sign from row swaps,
// or 0 when the matrix is singular. Works on any column count >= row count
// (extra columns ride along, e.g. an augmented right-hand side).
int bareiss_forward(IntMatrix& m) {
  const std::size_t rows = m.size();
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 <= rows && k < rows; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < rows && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == rows) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < rows; ++i) {
      for (std::size_t j = k + 1; j < m[i].size(); ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign;
}

}  // namespace

Rational determinant(const RationalMatrix& matrix) {
  const std::size_t n = matrix.size();
  if (n == 0) return Rational(1);
  for (const auto& row : matrix) {
    if (row.size() != n) throw std::invalid_argument("determinant: matrix not square");
  }
  Rational scale;
  IntMatrix m = clear_denominators(matrix, scale);
  const int sign = bareiss_forward(m);
  if (sign == 0) return Rational(0);
  return Rational(m[n - 1][n - 1]) * sign / scale;
}

std::optional<std::vector<Rational>> solve_linear_system(const RationalMatrix& matrix,
                                                         const std::vector<Rational>& rhs) {
  const std::size_t n = matrix.size();
  if (rhs.size() != n) throw std::invalid_argument("solve_linear_system: size mismatch");
  if (n == 0) return std::vector<Rational>{};
  RationalMatrix augmented(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i].size() != n) throw std::invalid_argument("solve_linear_system: matrix not square");
    augmented[i] = matrix[i];
    augmented[i].push_back(rhs[i]);
  }
  Rational scale;
  IntMatrix m = clear_denominators(augmented, scale);
  if (bareiss_forward(m) == 0) return std::nullopt;
  if (m[n - 1][n - 1] == 0) return std::nullopt;
  // Each eliminated row is still a valid equation of the original system, so
  // rational back substitution is exact.
  std::vector<Rational> x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    Rational acc = Rational(m[ii][n]);
    for (std::size_t j = ii + 1; j < n; ++j) acc -= Rational(m[ii][j]) * x[j];
    x[ii] = acc / Rational(m[ii][ii]);
  }
  return x;
}

}  // namespace mcw
