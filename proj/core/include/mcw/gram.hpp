#pragma once

#include <vector>

#include "mcw/gamma_value.hpp"
#include "mcw/polynomial.hpp"
#include "mcw/rational.hpp"

namespace mcw {

/// Gram data for the degree-n orthogonalization problem: the moment matrix of
/// M[1..n-1] under D[s,beta] and the target column against M[n]. All entries
/// share the Gamma(beta+1) base.
struct GramSystem {
  int n = 0;
  int s = 0;
  Rational beta;
  std::vector<std::vector<GammaValue>> matrix;  // (n-1)x(n-1), <M_i, M_j>
  std::vector<GammaValue> target;               // <M_n, M_j>, j = 1..n-1
};

GramSystem gram_system(int n, int s, const Rational& beta);

/// Weight vector w of C[n] = sum_i w_i M[n-i], w_0 = 1, fixed by the
/// orthogonality constraints <C_n, M_j> = 0 for 1 <= j <= n-1. Solved by
/// exact fraction-free elimination; the Gamma factors cancel, so weights are
/// pure rationals. Throws DegenerateGramError on a singular block.
std::vector<Rational> weights(int n, int s, const Rational& beta);

/// Cross-check route: the same weights as ratios of determinants in the
/// reversed-column layout (column c holds <M_j, M_{n-c}>), with the i-th
/// column replaced by the target and a global minus sign:
///   w_i = -det(A with col i <- <M_j, M_n>) / det(A).
std::vector<Rational> weights_by_determinants(int n, int s, const Rational& beta);

/// C[n,beta]^s = sum_{i=0}^{n-1} w_i^n M[n-i,beta]^s; C[0] = 1. Fully
/// orthogonal under D[s,beta], leading coefficient (-1)^n/n!.
Poly c_poly(int n, int s, const Rational& beta);

/// W[n,beta]^s = sum_i w_i^n L[n-i,beta]: the pre-image of C under the
/// deformation, apply_deformation(W, s, minus) == C.
Poly w_poly(int n, int s, const Rational& beta);

/// Verification surface: every <C_n, M_j> (j < n), every <C_n, C_m> (m < n),
/// and the diagonal norms <C_n, C_n>.
struct OrthogonalityEntry {
  enum class Kind { against_m, against_c, norm } kind;
  int n = 0;
  int other = 0;  // j or m; ignored for norms
  GammaValue value;
};
std::vector<OrthogonalityEntry> orthogonality_report(int nmax, int s, const Rational& beta);

}  // namespace mcw
