#include <doctest.h>

#include "mcw/binomial.hpp"
#include "mcw/deformation.hpp"
#include "mcw/laguerre.hpp"

using namespace mcw;

namespace {

// Independent nilpotent-exponential oracle: on polynomials the operator is
// (1 - alpha d)^{-s}, i.e. sum_k (s)_k alpha^k p^{(k)} / k!.
Poly deformation_oracle(const Poly& p, const Rational& s, int alpha) {
  Poly out;
  Poly d = p;
  Rational factor = 1;  // (s)_k alpha^k / k!
  for (int k = 0; !d.is_zero(); ++k) {
    out += d * factor;
    d = d.derivative();
    factor *= (s + k) * alpha;
    factor /= k + 1;
  }
  return out;
}

const std::vector<Rational> kBetas = {Rational(0), Rational(1, 2), Rational(3, 2),
                                      Rational(7, 3), Rational(5)};
const std::vector<Rational> kStrengths = {Rational(0), Rational(1), Rational(3),
                                          Rational(1, 2), Rational(-5, 3)};

}  // namespace

TEST_CASE("deformation operator examples") {
  const Poly p1{Rational(5, 2), Rational(-1)};
  CHECK(apply_deformation(p1, Rational(0), Alpha::minus) == p1);
  CHECK(apply_deformation(p1, Rational(0), Alpha::plus) == p1);
  CHECK(apply_deformation(p1, Rational(2), Alpha::minus) == Poly{Rational(9, 2), Rational(-1)});
  // degree-1 alpha=-1 case is the argument shift z -> z - s
  CHECK(apply_deformation(p1, Rational(2), Alpha::minus) == p1.shift_argument(Rational(-2)));
  const Poly p2{Rational(35, 8), Rational(-7, 2), Rational(1, 2)};
  CHECK(apply_deformation(p2, Rational(1), Alpha::minus) ==
        Poly{Rational(71, 8), Rational(-9, 2), Rational(1, 2)});
}

TEST_CASE("operator route equals the closed nilpotent-exponential oracle") {
  for (const auto& beta : kBetas) {
    for (int n = 0; n <= 10; ++n) {
      const Poly l = laguerre(n, beta);
      for (const auto& s : kStrengths) {
        CHECK(apply_deformation(l, s, Alpha::minus) == deformation_oracle(l, s, -1));
        CHECK(apply_deformation(l, s, Alpha::plus) == deformation_oracle(l, s, +1));
      }
    }
  }
}

TEST_CASE("m_poly concrete values") {
  CHECK(m_poly(0, Rational(7, 3), Rational(4)) == Poly::one());
  CHECK(m_poly(1, Rational(3, 2), Rational(1)) == Poly{Rational(7, 2), Rational(-1)});
  CHECK(m_poly(2, Rational(3, 2), Rational(1)) ==
        Poly{Rational(71, 8), Rational(-9, 2), Rational(1, 2)});
  // frozen cross-language value
  CHECK(m_poly(3, Rational(7, 3), Rational(2)) ==
        Poly{Rational(4532, 81), Rational(-227, 9), Rational(11, 3), Rational(-1, 6)});
}

TEST_CASE("m_expansion equals the operator route") {
  // explicit small sums first
  CHECK(m_expansion(1, Rational(3, 2), Rational(1)) ==
        laguerre(1, Rational(1, 2)) + laguerre(0, Rational(1, 2)) * Rational(2));
  CHECK(m_expansion(2, Rational(3, 2), Rational(1)) ==
        laguerre(2, Rational(1, 2)) + laguerre(1, Rational(1, 2)) * Rational(2) +
            laguerre(0, Rational(1, 2)) * Rational(4));
  for (const auto& beta : kBetas) {
    for (const auto& s : kStrengths) {
      for (int n = 0; n <= 10; ++n) {
        CHECK(m_expansion(n, beta, s) == m_poly(n, beta, s));
      }
      CHECK(m_expansion(6, beta, Rational(0)) == laguerre(6, beta));
    }
  }
}

TEST_CASE("alpha=+1 only shifts the parameter") {
  CHECK(apply_deformation(laguerre(1, Rational(3, 2)), Rational(1, 2), Alpha::plus) ==
        Poly{Rational(2), Rational(-1)});
  CHECK(shift_identity_check(0, Rational(7, 3), Rational(9)));
  CHECK(shift_identity_check(4, Rational(2), Rational(3)));
  for (const auto& beta : kBetas) {
    for (const auto& s : kStrengths) {
      for (int n = 0; n <= 10; ++n) CHECK(shift_identity_check(n, beta, s));
    }
  }
}

TEST_CASE("combined deformations") {
  for (const auto& beta : kBetas) {
    for (const auto& s : {Rational(1), Rational(2), Rational(1, 2)}) {
      CHECK(combined_deformation(Poly::one(), s, CombineVariant::plus) == Poly::one());
      CHECK(combined_deformation(Poly::one(), s, CombineVariant::minus) == Poly::one());
      for (int n = 0; n <= 8; ++n) {
        const Poly l = laguerre(n, beta);
        CHECK(combined_deformation(l, s, CombineVariant::plus) == m_poly(n, beta - s, s));
        CHECK(combined_deformation(l, s, CombineVariant::minus) == m_poly(n, beta + s, s));
      }
    }
  }
}

TEST_CASE("derivative recursion at every order") {
  CHECK(m_poly(1, Rational(3, 2), Rational(1)).derivative() ==
        -m_poly(0, Rational(5, 2), Rational(1)));
  CHECK(m_poly(2, Rational(3, 2), Rational(1)).derivative() ==
        Poly{Rational(-9, 2), Rational(1)});
  for (const auto& beta : kBetas) {
    for (const auto& s : kStrengths) {
      for (int n = 1; n <= 10; ++n) CHECK(m_derivative_recursion_check(n, beta, s));
    }
  }
  // top order m = n: both sides collapse to the constant (-1)^n
  const int n = 5;
  Poly d = m_poly(n, Rational(7, 3), Rational(2));
  for (int m = 0; m < n; ++m) d = d.derivative();
  CHECK(d == m_poly(0, Rational(7, 3) + n, Rational(2)) * Rational(n % 2 == 0 ? 1 : -1));
  CHECK(d == Poly{Rational(-1)});
}

TEST_CASE("transition between deformation strengths") {
  for (const auto& beta : kBetas) {
    CHECK(transition(4, beta, Rational(2), Rational(2)) == m_poly(4, beta, Rational(2)));
    CHECK(transition(4, beta, Rational(0), Rational(3)) == m_expansion(4, beta, Rational(3)));
    CHECK(transition(2, Rational(3, 2), Rational(1), Rational(2)) ==
          m_poly(2, Rational(3, 2), Rational(2)));
    for (const auto& s : kStrengths) {
      for (const auto& sp : kStrengths) {
        for (int n = 0; n <= 8; ++n) {
          CHECK(transition(n, beta, s, sp) == m_poly(n, beta, sp));
        }
      }
    }
  }
}

TEST_CASE("inverse connection and group law") {
  CHECK(inverse_connection_check(4, Rational(7, 3), Rational(0), Rational(1)));
  CHECK(inverse_connection_check(3, Rational(1, 2), Rational(2), Rational(1)));
  CHECK(apply_deformation(Poly{Rational(7, 2), Rational(-1)}, Rational(-1), Alpha::minus) ==
        Poly{Rational(5, 2), Rational(-1)});
  for (const auto& beta : kBetas) {
    const Poly l = laguerre(7, beta);
    for (const auto& s : kStrengths) {
      for (const auto& sp : kStrengths) {
        CHECK(inverse_connection_check(7, beta, s, sp));
        for (const Alpha alpha : {Alpha::plus, Alpha::minus}) {
          CHECK(apply_deformation(apply_deformation(l, s, alpha), sp, alpha) ==
                apply_deformation(l, s + sp, alpha));
        }
      }
    }
  }
}

TEST_CASE("inhomogeneous differential equation") {
  SUBCASE("trivial cases") {
    const OdeSides zero = ode_residual(0, Rational(7, 3), Rational(5));
    CHECK(zero.lhs.is_zero());
    CHECK(zero.rhs.is_zero());
    const OdeSides classical = ode_residual(6, Rational(3, 2), Rational(0));
    CHECK(classical.lhs.is_zero());
    CHECK(classical.rhs.is_zero());
  }
  SUBCASE("n=1 hand value") {
    const OdeSides sides = ode_residual(1, Rational(3, 2), Rational(1));
    CHECK(sides.lhs == Poly{Rational(2)});
    CHECK(sides.rhs == Poly{Rational(2)});
  }
  SUBCASE("exact identity over the grid, both rhs forms") {
    for (const auto& beta : kBetas) {
      for (const auto& s : kStrengths) {
        for (int n = 0; n <= 10; ++n) {
          const OdeSides sides = ode_residual(n, beta, s);
          CHECK(sides.lhs == sides.rhs);
          CHECK(sides.rhs == ode_inhomogeneous_recursion_image(n, beta, s));
        }
      }
    }
  }
  SUBCASE("flipped first-order sign breaks the identity by -2s M'") {
    for (const auto& beta : kBetas) {
      for (const auto& s : {Rational(1), Rational(3), Rational(1, 2)}) {
        // n = 1: constant discrepancy lhs - rhs = -2s
        const OdeSides n1 = ode_residual(1, beta, s, OdeFirstOrderSign::plus);
        CHECK(n1.lhs - n1.rhs == Poly{-2 * s});
        // general n: the gap is exactly 2s M' = -2s M[n-1, beta+1]^s
        for (int n = 1; n <= 6; ++n) {
          const OdeSides sides = ode_residual(n, beta, s, OdeFirstOrderSign::plus);
          CHECK(sides.lhs - sides.rhs == m_poly(n - 1, beta + 1, s) * (-2 * s));
        }
        // n = 0 is untouched, so the first failing degree is exactly 1
        const OdeSides n0 = ode_residual(0, beta, s, OdeFirstOrderSign::plus);
        CHECK(n0.lhs == n0.rhs);
      }
    }
  }
}

TEST_CASE("commutator identity") {
  CHECK(commutator_identity_check(Rational(0), Alpha::minus, Poly::z()));
  CHECK(commutator_identity_check(Rational(1), Alpha::minus, Poly::z()));
  CHECK(commutator_identity_check(Rational(2), Alpha::plus, Poly::z() * Poly::z()));
  for (const auto& beta : kBetas) {
    for (const auto& s : kStrengths) {
      for (const Alpha alpha : {Alpha::plus, Alpha::minus}) {
        CHECK(commutator_identity_check(s, alpha, laguerre(6, beta)));
      }
    }
  }
}

TEST_CASE("deformation preserves degree and leading coefficient") {
  for (const auto& beta : kBetas) {
    for (const auto& s : kStrengths) {
      for (int n = 0; n <= 10; ++n) {
        const Poly l = laguerre(n, beta);
        const Poly m = apply_deformation(l, s, Alpha::minus);
        CHECK(m.degree() == l.degree());
        CHECK(m.leading_coefficient() == l.leading_coefficient());
      }
    }
  }
}
