#include "mcw/verify.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "mcw/binomial.hpp"
#include "mcw/deformation.hpp"
#include "mcw/generating.hpp"
#include "mcw/gram.hpp"
#include "mcw/laguerre.hpp"
#include "mcw/measure.hpp"

namespace mcw {

std::vector<Rational> GridSpec::default_betas() {
  return {Rational(0), Rational(1, 2), Rational(1), Rational(3, 2), Rational(7, 3), Rational(5)};
}

namespace {

class Check {
 public:
  Check(std::string suite, std::string name, std::string identity) {
    result_.suite = std::move(suite);
    result_.name = std::move(name);
    result_.identity = std::move(identity);
  }

  void expect(bool ok, const std::string& detail) {
    ++result_.points;
    if (!ok && result_.pass) {
      result_.pass = false;
      result_.note = detail;
    }
  }

  void expect_deviation(double deviation, double threshold, const std::string& detail) {
    ++result_.points;
    result_.max_deviation = std::max(result_.max_deviation, deviation);
    if (deviation > threshold && result_.pass) {
      result_.pass = false;
      result_.note = detail + " (deviation " + std::to_string(deviation) + ")";
    }
  }

  CheckResult finish() { return std::move(result_); }

 private:
  CheckResult result_;
};

std::string at(int n, int s, const Rational& beta) {
  return "n=" + std::to_string(n) + ", s=" + std::to_string(s) + ", beta=" + to_string(beta);
}

std::string at(int n, const Rational& s, const Rational& beta) {
  return "n=" + std::to_string(n) + ", s=" + to_string(s) + ", beta=" + to_string(beta);
}

// ---- laguerre base suite -------------------------------------------------

void laguerre_suite(const GridSpec& grid, std::vector<CheckResult>& out) {
  const int nmax = std::max(grid.nmax, 12);

  Check rodrigues("laguerre", "rodrigues-consistency",
                  "d^n(z^{b+n} e^-z) = n! L[n,b](z) z^b e^-z");
  for (const auto& beta : grid.betas) {
    for (int n = 0; n <= std::min(grid.nmax, 8); ++n) {
      rodrigues.expect(rodrigues_check(n, beta), at(n, 0, beta));
    }
  }
  out.push_back(rodrigues.finish());

  Check derivative("laguerre", "derivative-relation", "d/dz L[n,b] = -L[n-1,b+1]");
  Check contiguous("laguerre", "contiguous-relation", "L[n,b] = L[n,b+1] - L[n-1,b+1]");
  Check shape("laguerre", "degree-leading-coefficient", "deg L[n,b] = n, lc = (-1)^n/n!");
  Check ode("laguerre", "laguerre-ode", "z L'' + (b+1-z) L' + n L = 0");
  for (const auto& beta : grid.betas) {
    for (int n = 0; n <= nmax; ++n) {
      const Poly l = laguerre(n, beta);
      if (n >= 1) {
        derivative.expect(l.derivative() == -laguerre(n - 1, beta + 1), at(n, 0, beta));
        contiguous.expect(l == laguerre(n, beta + 1) - laguerre(n - 1, beta + 1), at(n, 0, beta));
      }
      const Rational expected_lc =
          Rational(n % 2 == 0 ? 1 : -1) / Rational(factorial(n));
      shape.expect(l.degree() == n && l.leading_coefficient() == expected_lc, at(n, 0, beta));
      const Poly lp = l.derivative();
      Poly residual = Poly::z() * lp.derivative();
      residual += lp * (beta + 1);
      residual -= Poly::z() * lp;
      residual += l * Rational(n);
      ode.expect(residual.is_zero(), at(n, 0, beta));
    }
  }
  out.push_back(derivative.finish());
  out.push_back(contiguous.finish());
  out.push_back(shape.finish());
  out.push_back(ode.finish());

  Check negative("laguerre", "negative-index", "L[n<0,b] = 0");
  for (const auto& beta : grid.betas) {
    negative.expect(laguerre_or_zero(-1, beta).is_zero() && laguerre_or_zero(-5, beta).is_zero(),
                    "beta=" + to_string(beta));
  }
  out.push_back(negative.finish());
}

// ---- deformation suite ---------------------------------------------------

void deform_suite(const GridSpec& grid, std::vector<CheckResult>& out) {
  Check three_route("deform", "three-route-coherence",
                    "operator M = Laguerre expansion M = series coefficient M");
  for (const auto& beta : grid.betas) {
    for (int s = 0; s <= grid.smax; ++s) {
      const PowerSeries series = m_series(beta, s, grid.order);
      for (int n = 0; n <= grid.order; ++n) {
        const Poly direct = m_poly(n, beta, s);
        const bool ok =
            direct == m_expansion(n, beta, s) && direct == series.coefficient(n);
        three_route.expect(ok, at(n, s, beta));
      }
    }
  }
  out.push_back(three_route.finish());

  Check shift("deform", "shift-identity", "exp[s sum d_m/m] L[n,b] = L[n,b-s]");
  Check combined("deform", "combined-deformations",
                 "exp[s sum ((-1)^m +/- 1) d_m/m] L[n,b] = M[n,b-/+s]^s");
  Check recursion("deform", "derivative-recursion", "d^m M[n,b]^s = (-1)^m M[n-m,b+m]^s");
  for (const auto& beta : grid.betas) {
    for (int s = 0; s <= grid.smax; ++s) {
      for (int n = 0; n <= grid.nmax; ++n) {
        shift.expect(shift_identity_check(n, beta, s), at(n, s, beta));
        const Poly l = laguerre(n, beta);
        const bool combined_ok =
            combined_deformation(l, s, CombineVariant::plus) == m_poly(n, beta - s, s) &&
            combined_deformation(l, s, CombineVariant::minus) == m_poly(n, beta + s, s);
        combined.expect(combined_ok, at(n, s, beta));
        if (n >= 1) recursion.expect(m_derivative_recursion_check(n, beta, s), at(n, s, beta));
      }
    }
  }
  out.push_back(shift.finish());
  out.push_back(combined.finish());
  out.push_back(recursion.finish());

  Check group("deform", "group-law", "E_s E_s' = E_{s+s'}");
  Check inverse("deform", "inverse-connection", "E_{-s} M^s = L and E_{s'} M^s = M^{s+s'}");
  Check preserve("deform", "degree-preservation", "deformation fixes degree and leading coeff");
  const std::vector<Rational> strengths = {Rational(0), Rational(1), Rational(1, 2),
                                           Rational(-2), Rational(5, 3)};
  for (const auto& beta : grid.betas) {
    for (int n = 0; n <= std::min(grid.nmax, 8); ++n) {
      const Poly l = laguerre(n, beta);
      for (const auto& s : strengths) {
        for (const auto& s2 : strengths) {
          for (const Alpha alpha : {Alpha::plus, Alpha::minus}) {
            const Poly once = apply_deformation(apply_deformation(l, s, alpha), s2, alpha);
            group.expect(once == apply_deformation(l, s + s2, alpha),
                         at(n, s, beta) + ", s'=" + to_string(s2));
          }
        }
        inverse.expect(inverse_connection_check(n, beta, s, Rational(3, 2)), at(n, s, beta));
        const Poly deformed = apply_deformation(l, s, Alpha::minus);
        preserve.expect(deformed.degree() == l.degree() &&
                            deformed.leading_coefficient() == l.leading_coefficient(),
                        at(n, s, beta));
      }
    }
  }
  out.push_back(group.finish());
  out.push_back(inverse.finish());
  out.push_back(preserve.finish());

  Check trans("deform", "transition-formula",
              "M[n,b]^s' = sum_k 2^k (s'-s)_k/k! M[n-k,b-s'+s]^s");
  for (const auto& beta : grid.betas) {
    for (int s = 0; s <= grid.smax; ++s) {
      for (int sp = 0; sp <= grid.smax; ++sp) {
        for (int n = 0; n <= grid.nmax; ++n) {
          trans.expect(transition(n, beta, s, sp) == m_poly(n, beta, sp),
                       at(n, s, beta) + ", s'=" + std::to_string(sp));
        }
      }
    }
  }
  out.push_back(trans.finish());

  Check commutator("deform", "commutator-identity",
                   "[E_s, z] = s sum_m alpha^m d^{m-1} E_s");
  for (const auto& beta : grid.betas) {
    for (int n = 0; n <= std::min(grid.nmax, 8); ++n) {
      for (const auto& s : strengths) {
        for (const Alpha alpha : {Alpha::plus, Alpha::minus}) {
          commutator.expect(commutator_identity_check(s, alpha, laguerre(n, beta)),
                            at(n, s, beta));
        }
      }
    }
  }
  out.push_back(commutator.finish());
}

// ---- differential-equation suite ------------------------------------------

void ode_suite(const GridSpec& grid, Perturbation perturbation, std::vector<CheckResult>& out) {
  const OdeFirstOrderSign sign = perturbation == Perturbation::ode_sign
                                     ? OdeFirstOrderSign::plus
                                     : OdeFirstOrderSign::minus;
  Check residual("ode", "ode-residual",
                 "z M'' + (b-s+1-z) M' + n M = 2s sum_m (-1)^m d^m M");
  Check forms("ode", "ode-rhs-forms",
              "2s sum (-1)^m d^m M = 2s sum M[n-m,b+m]^s");
  for (const auto& beta : grid.betas) {
    for (int s = 0; s <= grid.smax; ++s) {
      for (int n = 0; n <= grid.nmax; ++n) {
        const OdeSides sides = ode_residual(n, beta, s, sign);
        const Poly gap = sides.lhs - sides.rhs;
        residual.expect(gap.is_zero(), at(n, s, beta) + ": lhs-rhs = " + gap.str());
        forms.expect(sides.rhs == ode_inhomogeneous_recursion_image(n, beta, s), at(n, s, beta));
      }
    }
  }
  out.push_back(residual.finish());
  out.push_back(forms.finish());
}

// ---- generating-function suite ---------------------------------------------

void series_suite(const GridSpec& grid, std::vector<CheckResult>& out) {
  Check coeffs("series", "laguerre-series-coefficients",
               "[t^n] e^{-zt/(1-t)}/(1-t)^{b+1} = L[n,b]");
  Check dz("series", "dz-relation", "d/dz L(z,t,b) = -t L(z,t,b+1)");
  Check factor("series", "m-series-factorization",
               "M(z,t,b,s) = ((1-2t)/(1-t))^{-s} L(z,t,b)");
  for (const auto& beta : grid.betas) {
    const PowerSeries lg = laguerre_series(beta, grid.order);
    for (int n = 0; n <= grid.order; ++n) {
      coeffs.expect(lg.coefficient(n) == laguerre(n, beta), at(n, 0, beta));
    }
    dz.expect(dz_relation_check(beta, grid.order), "beta=" + to_string(beta));
    for (int s = 0; s <= grid.smax; ++s) {
      factor.expect(m_series_factor_check(beta, s, grid.order), at(0, s, beta));
    }
  }
  out.push_back(coeffs.finish());
  out.push_back(dz.finish());
  out.push_back(factor.finish());
}

// ---- measure suite ---------------------------------------------------------

void measure_suite(const GridSpec& grid, std::vector<CheckResult>& out) {
  // The density route check deliberately extends the beta grid so s = 6 has
  // admissible points.
  std::vector<Rational> density_betas = grid.betas;
  density_betas.push_back(Rational(11, 2));
  density_betas.push_back(Rational(13, 2));

  Check two_routes("measure", "density-two-routes",
                   "(-1)^s e^z d^s(e^-2z z^b) = (-1)^s s! z^{b-s} e^-z L[s,b-s](2z)");
  for (const auto& beta : density_betas) {
    for (int s = 0; s <= 6; ++s) {
      if (!is_admissible(s, beta)) continue;
      two_routes.expect(density(s, beta) == density_closed_form(s, beta), at(0, s, beta));
    }
  }
  out.push_back(two_routes.finish());

  Check reduction("measure", "monomial-reduction-roundtrip",
                  "z^n D[s,b] = sum_p binom(n,n-p) s(s-1)..(s+1-p) D[s-p,b+n-p]");
  Check moment_zero("measure", "zeroth-moment",
                    "integral of D[s,b] = Gamma(b+1), independent of s");
  Check partial("measure", "partial-orthogonality", "<M_n, 1> = delta_{n0} Gamma(b+1)");
  Check series_orth("measure", "series-orthogonality",
                    "<[t^n] M(z,t,b,s), 1> = delta_{n0} Gamma(b+1)");
  Check sign_change("measure", "sign-indefiniteness",
                    "D[s,b] takes both signs on (0,inf) for s >= 1");
  for (const auto& beta : grid.betas) {
    for (int s = 0; s <= grid.smax; ++s) {
      if (!is_admissible(s, beta)) continue;

      for (int n = 0; n <= std::min(grid.nmax, 8); ++n) {
        const WeightedExpr d = density(s, beta);
        const WeightedExpr lhs = WeightedExpr::make(d.rate, d.power + n, d.poly);
        // Accumulate the reduction terms over a common power offset.
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
        reduction.expect(lhs == WeightedExpr::make(Rational(-1), min_power, sum), at(n, s, beta));
      }

      moment_zero.expect(moment(0, s, beta) == GammaValue(Rational(1), beta), at(0, s, beta));

      const PowerSeries series = m_series(beta, s, grid.order);
      for (int n = 0; n <= grid.nmax; ++n) {
        const GammaValue ip = inner_product(m_poly(n, beta, s), Poly::one(), s, beta);
        const GammaValue expected(n == 0 ? Rational(1) : Rational(0), beta);
        partial.expect(ip == expected, at(n, s, beta));
        if (n <= grid.order) {
          series_orth.expect(
              inner_product(series.coefficient(n), Poly::one(), s, beta) == expected,
              at(n, s, beta));
        }
      }

      if (s >= 1) {
        // Exact rational sign sampling of the density polynomial; the
        // exponential and power prefactors are positive for z > 0.
        const WeightedExpr d = density(s, beta);
        bool seen_positive = false, seen_negative = false;
        const Rational upper = Rational(4) * (2 * s + 2) + beta * 4;
        for (Rational z(1, 8); z <= upper; z += Rational(1, 8)) {
          const Rational v = d.poly.evaluate(z);
          seen_positive |= v > 0;
          seen_negative |= v < 0;
          if (seen_positive && seen_negative) break;
        }
        sign_change.expect(seen_positive && seen_negative, at(0, s, beta));
      }
    }
  }
  out.push_back(reduction.finish());
  out.push_back(moment_zero.finish());
  out.push_back(partial.finish());
  out.push_back(series_orth.finish());
  out.push_back(sign_change.finish());
}

// ---- gram suite ------------------------------------------------------------

void gram_suite(const GridSpec& grid, std::vector<CheckResult>& out) {
  const int gram_nmax = std::min(grid.nmax, 8);

  Check routes("gram", "weights-two-routes", "linear-solve weights = determinant-ratio weights");
  Check full("gram", "full-orthogonality", "<C_n, M_j> = 0 (j<n) and <C_n, C_m> = 0 (m<n)");
  Check linkage("gram", "deformation-linkage", "exp[s sum (-1)^m d_m/m] W_n = C_n");
  Check shape("gram", "c-degree-leading", "deg C_n = n, lc = (-1)^n/n!");
  Check collapse("gram", "s-zero-collapse", "s=0: weights = [1,0,...], C_n = W_n = L[n,b]");
  for (const auto& beta : grid.betas) {
    for (int s = 0; s <= grid.smax; ++s) {
      if (!is_admissible(s, beta)) continue;
      for (int n = 2; n <= gram_nmax; ++n) {
        routes.expect(weights(n, s, beta) == weights_by_determinants(n, s, beta), at(n, s, beta));
      }
      for (const auto& entry : orthogonality_report(gram_nmax, s, beta)) {
        if (entry.kind == OrthogonalityEntry::Kind::norm) continue;
        full.expect(entry.value.is_zero(),
                    at(entry.n, s, beta) + " vs index " + std::to_string(entry.other));
      }
      for (int n = 0; n <= gram_nmax; ++n) {
        const Poly c = c_poly(n, s, beta);
        linkage.expect(apply_deformation(w_poly(n, s, beta), s, Alpha::minus) == c,
                       at(n, s, beta));
        const Rational expected_lc = Rational(n % 2 == 0 ? 1 : -1) / Rational(factorial(n));
        shape.expect(c.degree() == n && c.leading_coefficient() == expected_lc, at(n, s, beta));
        if (s == 0) {
          const Poly l = laguerre(n, beta);
          bool ok = c == l && w_poly(n, 0, beta) == l;
          if (n >= 1) {
            std::vector<Rational> expected(static_cast<std::size_t>(n), Rational(0));
            expected[0] = 1;
            ok = ok && weights(n, 0, beta) == expected;
          }
          collapse.expect(ok, at(n, 0, beta));
        }
      }
    }
  }
  out.push_back(routes.finish());
  out.push_back(full.finish());
  out.push_back(linkage.finish());
  out.push_back(shape.finish());
  out.push_back(collapse.finish());
}

// ---- numeric coherence suite -------------------------------------------------

void numeric_suite(const GridSpec& grid, std::vector<CheckResult>& out) {
  const int gram_nmax = std::min(grid.nmax, 8);
  const double tol = grid.tol;

  Check moments("numeric", "moments-vs-quadrature",
                "adaptive quadrature of z^n D matches the exact moment");
  Check inners("numeric", "inner-products-vs-quadrature",
               "adaptive quadrature of p q D matches the exact inner product");
  Check coherence("numeric", "density-eval-coherence",
                  "closed-form and derivative-form float evaluations agree");
  Check signs("numeric", "density-sign-change",
              "sampled float density takes both signs for s >= 1");

  const auto compare = [tol](const QuadratureResult& quad, const GammaValue& exact) {
    const double reference = gamma_value_to_double(exact);
    if (exact.is_zero()) return std::fabs(quad.value);
    return std::fabs(quad.value - reference) / std::fabs(reference);
  };

  for (const auto& beta : grid.betas) {
    for (int s = 0; s <= grid.smax; ++s) {
      if (!is_admissible(s, beta)) continue;

      for (int n = 0; n <= grid.nmax; ++n) {
        const QuadratureResult quad = quad_moment(n, s, beta, tol * 1e-2, grid.quadrature);
        moments.expect_deviation(compare(quad, moment(n, s, beta)), tol, at(n, s, beta));
      }

      std::vector<Poly> m_polys, c_polys;
      for (int k = 0; k <= std::max(grid.nmax, gram_nmax); ++k) m_polys.push_back(m_poly(k, beta, s));
      for (int k = 0; k <= gram_nmax; ++k) c_polys.push_back(c_poly(k, s, beta));

      for (int n = 0; n <= grid.nmax; ++n) {
        const QuadratureResult quad =
            quad_inner_product(m_polys[static_cast<std::size_t>(n)], Poly::one(), s, beta,
                               tol * 1e-2, grid.quadrature);
        const GammaValue exact = inner_product(m_polys[static_cast<std::size_t>(n)], Poly::one(), s, beta);
        inners.expect_deviation(compare(quad, exact), tol, "<M_" + std::to_string(n) + ", 1> " + at(n, s, beta));
      }
      for (int i = 1; i <= gram_nmax; ++i) {
        for (int j = i; j <= gram_nmax; ++j) {
          const QuadratureResult quad =
              quad_inner_product(m_polys[static_cast<std::size_t>(i)], m_polys[static_cast<std::size_t>(j)],
                                 s, beta, tol * 1e-2, grid.quadrature);
          const GammaValue exact =
              inner_product(m_polys[static_cast<std::size_t>(i)], m_polys[static_cast<std::size_t>(j)], s, beta);
          inners.expect_deviation(compare(quad, exact),
                                  tol, "<M_" + std::to_string(i) + ", M_" + std::to_string(j) + "> " + at(0, s, beta));
        }
      }
      for (int n = 0; n <= gram_nmax; ++n) {
        for (int mm = 0; mm <= n; ++mm) {
          const QuadratureResult quad =
              quad_inner_product(c_polys[static_cast<std::size_t>(n)], c_polys[static_cast<std::size_t>(mm)],
                                 s, beta, tol * 1e-2, grid.quadrature);
          const GammaValue exact =
              inner_product(c_polys[static_cast<std::size_t>(n)], c_polys[static_cast<std::size_t>(mm)], s, beta);
          inners.expect_deviation(compare(quad, exact),
                                  tol, "<C_" + std::to_string(n) + ", C_" + std::to_string(mm) + "> " + at(0, s, beta));
        }
      }

      const WeightedExpr derivative_form = density(s, beta);
      for (const double z : {0.01, 0.05, 0.25, 0.75, 1.0, 2.5, 5.0, 10.0, 20.0, 50.0}) {
        const double closed = eval_density(s, beta, z);
        const double direct = eval_weighted(derivative_form, z);
        // Normalize against the positive-coefficient evaluation, the natural
        // roundoff scale of both paths.
        long double scale = 0;
        for (int kk = 0; kk <= derivative_form.poly.degree(); ++kk) {
          scale += std::fabs(to_long_double(derivative_form.poly.coefficient(kk))) *
                   std::pow(static_cast<long double>(z), kk);
        }
        scale *= std::exp(static_cast<long double>(-z)) *
                 std::pow(static_cast<long double>(z), to_long_double(derivative_form.power));
        const double deviation =
            std::fabs(closed - direct) / std::max(static_cast<double>(scale), 1e-300);
        coherence.expect_deviation(deviation, 1e-12, at(0, s, beta) + ", z=" + std::to_string(z));
      }

      if (s >= 1) {
        bool seen_positive = false, seen_negative = false;
        for (double z = 0.125; z <= 8.0 * (s + 1) + to_double(beta); z += 0.125) {
          const double v = eval_density(s, beta, z);
          seen_positive |= v > 0;
          seen_negative |= v < 0;
          if (seen_positive && seen_negative) break;
        }
        signs.expect(seen_positive && seen_negative, at(0, s, beta));
      }
    }
  }
  out.push_back(moments.finish());
  out.push_back(inners.finish());
  out.push_back(coherence.finish());
  out.push_back(signs.finish());
}

}  // namespace

std::vector<CheckResult> run_verification(const GridSpec& grid, Perturbation perturbation) {
  std::vector<CheckResult> results;
  laguerre_suite(grid, results);
  deform_suite(grid, results);
  ode_suite(grid, perturbation, results);
  series_suite(grid, results);
  measure_suite(grid, results);
  gram_suite(grid, results);
  if (grid.with_numeric) numeric_suite(grid, results);
  return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.pass; });
}

void print_report(std::ostream& out, const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    out << (r.pass ? "PASS" : "FAIL") << "  " << r.suite << "/" << r.name << "  ["
        << r.points << " points]";
    if (r.max_deviation > 0) {
      std::ostringstream dev;
      dev.setf(std::ios::scientific);
      dev.precision(2);
      dev << r.max_deviation;
      out << "  max-dev " << dev.str();
    }
    out << "  :: " << r.identity;
    if (!r.pass) out << "\n      first failure: " << r.note;
    out << "\n";
  }
}

}  // namespace mcw
