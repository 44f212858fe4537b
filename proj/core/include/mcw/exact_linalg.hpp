#pragma once

#include <optional>
#include <vector>

#include "mcw/rational.hpp"

namespace mcw {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Exact determinant via Bareiss fraction-free elimination: denominators are
/// cleared per row, the integer core runs division-free growth control, and
/// the row multipliers are divided back out at the end.
Rational determinant(const RationalMatrix& matrix);

/// Exact solve of A x = b by fraction-free forward elimination plus rational
/// back substitution. Returns nullopt when A is singular.
std::optional<std::vector<Rational>> solve_linear_system(const RationalMatrix& matrix,
                                                         const std::vector<Rational>& rhs);

}  // namespace mcw
