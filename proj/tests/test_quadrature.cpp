#include <doctest.h>

#include <cmath>

#include "mcw/deformation.hpp"
#include "mcw/errors.hpp"
#include "mcw/gram.hpp"
#include "mcw/measure.hpp"
#include "mcw/quadrature.hpp"

using namespace mcw;

TEST_CASE("float gamma base meets the cross-check contract") {
  // relative error <= 1e-12 on (0, 50)
  CHECK(std::fabs(std::tgamma(2.5) - 1.3293403881791370205) < 1e-12);
  CHECK(std::fabs(std::tgamma(0.5) - std::sqrt(std::acos(-1.0))) < 1e-12);
  const double g22 = 51090942171709440000.0;  // 21!
  CHECK(std::fabs(std::tgamma(22.0) - g22) / g22 < 1e-12);
  CHECK(gamma_value_to_double(GammaValue(Rational(7, 2), Rational(3, 2))) ==
        doctest::Approx(4.6526913586).epsilon(1e-10));
}

TEST_CASE("density evaluation") {
  CHECK(eval_density(0, Rational(0), 1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
  CHECK(eval_density(1, Rational(3, 2), 1.0) ==
        doctest::Approx(0.5 * std::exp(-1.0)).epsilon(1e-14));
  CHECK(eval_density(1, Rational(3, 2), 0.5) < 0.0);  // root of 2z - 3/2 at z = 3/4
  CHECK(eval_density(1, Rational(3, 2), 0.74) < 0.0);
  CHECK(eval_density(1, Rational(3, 2), 0.76) > 0.0);
  CHECK_THROWS_AS(eval_density(2, Rational(0), 1.0), IntegrabilityError);
}

TEST_CASE("closed-form and derivative-form float paths agree") {
  for (int s = 0; s <= 5; ++s) {
    for (const auto& beta : {Rational(3, 2), Rational(7, 3), Rational(5), Rational(13, 2)}) {
      if (!is_admissible(s, beta)) continue;
      const WeightedExpr d = density(s, beta);
      for (double z = 0.01; z <= 50.0; z *= 2.7) {
        const double a = eval_density(s, beta, z);
        const double b = eval_weighted(d, z);
        CHECK(std::fabs(a - b) <= 1e-12 * std::max({std::fabs(a), std::fabs(b), 1e-12}));
      }
    }
  }
}

TEST_CASE("adaptive integrator on a closed form") {
  const auto cubic = [](long double x) { return x * x * x; };
  const QuadratureResult r = adaptive_integrate(cubic, 0.0L, 2.0L, 1e-12);
  CHECK(r.value == doctest::Approx(4.0).epsilon(1e-13));
  CHECK(r.reliable);
  CHECK(r.subdivisions >= 1);
  CHECK(r.abs_error_estimate >= 0.0);
}

TEST_CASE("quadrature recovers exact moments") {
  const QuadratureResult unit = quad_moment(0, 0, Rational(0), 1e-10);
  CHECK(unit.value == doctest::Approx(1.0).epsilon(1e-10));

  const QuadratureResult g52 = quad_moment(0, 1, Rational(3, 2), 1e-10);
  CHECK(g52.value == doctest::Approx(1.329340).epsilon(1e-6));

  const QuadratureResult first = quad_moment(1, 1, Rational(3, 2), 1e-10);
  CHECK(first.value == doctest::Approx(4.652691).epsilon(1e-6));

  for (int n = 0; n <= 10; ++n) {
    const QuadratureResult q = quad_moment(n, 2, Rational(7, 3), 1e-10);
    const double exact = gamma_value_to_double(moment(n, 2, Rational(7, 3)));
    CHECK(std::fabs(q.value - exact) <= 1e-8 * std::fabs(exact));
    CHECK(q.reliable);
  }
}

TEST_CASE("quadrature recovers exact inner products including designed zeros") {
  const Rational beta(3, 2);
  const QuadratureResult norm0 = quad_inner_product(Poly::one(), Poly::one(), 1, beta, 1e-10);
  CHECK(norm0.value == doctest::Approx(std::tgamma(2.5)).epsilon(1e-9));

  const Poly m1 = m_poly(1, beta, Rational(1));
  CHECK(std::fabs(quad_inner_product(m1, Poly::one(), 1, beta, 1e-10).value) < 1e-8);

  const Poly c1 = c_poly(1, 1, beta), c2 = c_poly(2, 1, beta);
  CHECK(std::fabs(quad_inner_product(c2, c1, 1, beta, 1e-10).value) < 1e-8);

  const double n22 = gamma_value_to_double(inner_product(c2, c2, 1, beta));
  CHECK(quad_inner_product(c2, c2, 1, beta, 1e-10).value == doctest::Approx(n22).epsilon(1e-9));
  CHECK(n22 < 0.0);  // sign-indefinite norm
}

TEST_CASE("subdivision cap flags unreliable results") {
  QuadratureOptions cramped;
  cramped.max_panels = 3;
  const QuadratureResult q = quad_moment(8, 2, Rational(7, 3), 1e-12, cramped);
  CHECK_FALSE(q.reliable);
  CHECK(q.subdivisions <= 3);
  CHECK(q.abs_error_estimate > 0.0);
}

TEST_CASE("quadrature rejects inadmissible parameters") {
  CHECK_THROWS_AS(quad_moment(0, 2, Rational(0), 1e-8), IntegrabilityError);
  CHECK_THROWS_AS(quad_inner_product(Poly::one(), Poly::one(), 4, Rational(2), 1e-8),
                  IntegrabilityError);
}
