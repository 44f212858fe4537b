#include <doctest.h>

#include "mcw/deformation.hpp"
#include "mcw/errors.hpp"
#include "mcw/generating.hpp"
#include "mcw/measure.hpp"

using namespace mcw;

namespace {
// Admissible grid points (beta - s > -1), including the large betas that give
// s = 6 real coverage.
std::vector<std::pair<int, Rational>> admissible_grid() {
  std::vector<std::pair<int, Rational>> out;
  const std::vector<Rational> betas = {Rational(0),    Rational(1, 2),  Rational(1),
                                       Rational(3, 2), Rational(7, 3),  Rational(5),
                                       Rational(11, 2), Rational(13, 2)};
  for (int s = 0; s <= 6; ++s) {
    for (const auto& beta : betas) {
      if (is_admissible(s, beta)) out.emplace_back(s, beta);
    }
  }
  return out;
}
}  // namespace

TEST_CASE("weighted derivative product rule") {
  CHECK(weighted_derivative(WeightedExpr::make(Rational(-1), Rational(0), Poly::one())) ==
        WeightedExpr::make(Rational(-1), Rational(0), Poly{Rational(-1)}));
  CHECK(weighted_derivative(WeightedExpr::make(Rational(-2), Rational(3, 2), Poly::one())) ==
        WeightedExpr::make(Rational(-2), Rational(1, 2), Poly{Rational(3, 2), Rational(-2)}));
  CHECK(weighted_derivative(
            WeightedExpr::make(Rational(0), Rational(0), Poly::z() * Poly::z())) ==
        WeightedExpr::make(Rational(0), Rational(0), Poly{Rational(0), Rational(2)}));
}

TEST_CASE("density in the admissible domain") {
  CHECK(density(0, Rational(7, 3)) ==
        WeightedExpr::make(Rational(-1), Rational(7, 3), Poly::one()));
  CHECK(density(1, Rational(3, 2)) ==
        WeightedExpr::make(Rational(-1), Rational(1, 2), Poly{Rational(-3, 2), Rational(2)}));
  // frozen cross-language value
  CHECK(density(3, Rational(7, 2)) ==
        WeightedExpr::make(Rational(-1), Rational(1, 2),
                           Poly{Rational(-105, 8), Rational(105, 2), Rational(-42), Rational(8)}));
}

TEST_CASE("inadmissible parameters raise the integrability error") {
  // (s=2, beta=0) is the instructive case: the symbolic derivative form exists
  // (d^2 e^{-2z} = 4 e^{-2z}) but its integral is 4, not Gamma(1), because the
  // boundary terms of the defining integration by parts no longer vanish.
  WeightedExpr w = WeightedExpr::make(Rational(-2), Rational(0), Poly::one());
  w = weighted_derivative(weighted_derivative(w));
  CHECK(w == WeightedExpr::make(Rational(-2), Rational(0), Poly{Rational(4)}));
  CHECK_THROWS_AS(density(2, Rational(0)), IntegrabilityError);
  CHECK_THROWS_AS(density(1, Rational(-1, 2)), IntegrabilityError);
  CHECK_THROWS_AS(moment(0, 2, Rational(1, 2)), IntegrabilityError);
  CHECK_THROWS_AS(inner_product(Poly::one(), Poly::one(), 3, Rational(1)), IntegrabilityError);
  CHECK(is_admissible(2, Rational(3, 2)));
  CHECK_FALSE(is_admissible(2, Rational(1)));
}

TEST_CASE("density two routes agree") {
  CHECK(density_closed_form(0, Rational(7, 3)) == density(0, Rational(7, 3)));
  CHECK(density_closed_form(1, Rational(3, 2)) == density(1, Rational(3, 2)));
  CHECK(density_closed_form(2, Rational(7, 2)) == density(2, Rational(7, 2)));
  for (const auto& [s, beta] : admissible_grid()) {
    CHECK(density(s, beta) == density_closed_form(s, beta));
  }
}

TEST_CASE("monomial reduction terms") {
  const auto zero = monomial_reduction(0, 3, Rational(5));
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].coeff == 1);

  const auto one = monomial_reduction(1, 3, Rational(5));
  REQUIRE(one.size() == 2);
  CHECK(one[0].coeff == 1);  // -> D[s, beta+1]
  CHECK(one[1].coeff == 3);  // -> s * D[s-1, beta]

  const auto two = monomial_reduction(2, 3, Rational(5));
  REQUIRE(two.size() == 3);
  CHECK(two[0].coeff == 1);
  CHECK(two[1].coeff == 6);  // 2s
  CHECK(two[2].coeff == 6);  // s(s-1)

  // integer s truncates the list automatically past p = s
  const auto trunc = monomial_reduction(4, 2, Rational(5));
  CHECK(trunc[3].coeff == 0);
  CHECK(trunc[4].coeff == 0);
}

TEST_CASE("monomial reduction round-trip against the density") {
  for (const auto& [s, beta] : admissible_grid()) {
    for (int n = 0; n <= 8; ++n) {
      const WeightedExpr d = density(s, beta);
      const WeightedExpr lhs = WeightedExpr::make(d.rate, d.power + n, d.poly);
      Poly sum;
      Rational min_power = d.power + n;
      std::vector<std::pair<Rational, Poly>> terms;
      for (const auto& term : monomial_reduction(n, s, beta)) {
        if (term.coeff == 0) continue;
        const WeightedExpr di = density(s - term.p, beta + n - term.p);
        terms.emplace_back(di.power, di.poly * term.coeff);
        if (terms.back().first < min_power) min_power = terms.back().first;
      }
      for (auto& [power, poly] : terms) {
        sum += poly.shift_up(static_cast<int>(to_long(power - min_power)));
      }
      CHECK(lhs == WeightedExpr::make(Rational(-1), min_power, sum));
    }
  }
}

TEST_CASE("moments") {
  CHECK(moment(0, 4, Rational(5)) == GammaValue(Rational(1), Rational(5)));
  CHECK(moment(1, 1, Rational(3, 2)) == GammaValue(Rational(7, 2), Rational(3, 2)));
  CHECK(moment(2, 1, Rational(3, 2)) == GammaValue(Rational(55, 4), Rational(3, 2)));
  // frozen cross-language values
  CHECK(moment(3, 1, Rational(3, 2)).coeff() == Rational(525, 8));
  CHECK(moment(5, 2, Rational(7, 3)).coeff() == Rational(2429440, 243));
  for (const auto& [s, beta] : admissible_grid()) {
    CHECK(moment(0, s, beta) == GammaValue(Rational(1), beta));
  }
}

TEST_CASE("inner products") {
  const Rational beta(3, 2);
  CHECK(inner_product(Poly::one(), Poly::one(), 1, beta) == GammaValue(Rational(1), beta));
  const Poly m1 = m_poly(1, beta, Rational(1));
  CHECK(inner_product(m1, Poly::one(), 1, beta).is_zero());
  CHECK(inner_product(m1, m1, 1, beta) == GammaValue(Rational(3, 2), beta));
  CHECK(inner_product(m_poly(2, beta, Rational(1)), m1, 1, beta) ==
        GammaValue(Rational(-2), beta));
  // bilinearity and symmetry spot check
  const Poly p = m_poly(3, beta, Rational(1));
  CHECK(inner_product(p, m1, 1, beta) == inner_product(m1, p, 1, beta));
  CHECK(inner_product(p + m1, m1, 1, beta) ==
        inner_product(p, m1, 1, beta) + inner_product(m1, m1, 1, beta));
}

TEST_CASE("general <M1,M1> formula") {
  for (const auto& [s, beta] : admissible_grid()) {
    const Poly m1 = m_poly(1, beta, s);
    CHECK(inner_product(m1, m1, s, beta) == GammaValue(beta + 1 - s, beta));
  }
}

TEST_CASE("partial orthogonality, direct and via the generating function") {
  for (const auto& [s, beta] : admissible_grid()) {
    const PowerSeries series = m_series(beta, s, 10);
    for (int n = 0; n <= 10; ++n) {
      const GammaValue expected(n == 0 ? Rational(1) : Rational(0), beta);
      CHECK(inner_product(m_poly(n, beta, s), Poly::one(), s, beta) == expected);
      CHECK(inner_product(series.coefficient(n), Poly::one(), s, beta) == expected);
    }
  }
}

TEST_CASE("density polynomial changes sign for s >= 1") {
  for (const auto& [s, beta] : admissible_grid()) {
    if (s < 1) continue;
    const WeightedExpr d = density(s, beta);
    bool positive = false, negative = false;
    for (Rational z(1, 8); z <= Rational(8) * (s + 1) + beta; z += Rational(1, 8)) {
      const Rational v = d.poly.evaluate(z);
      positive |= v > 0;
      negative |= v < 0;
    }
    CHECK((positive && negative));
  }
}
