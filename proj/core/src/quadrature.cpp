#include "mcw/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "mcw/laguerre.hpp"
#include "mcw/measure.hpp"

namespace mcw {

namespace {

// 15-point Kronrod abscissae/weights with the embedded 7-point Gauss rule
// (QUADPACK dqk15 constants).
constexpr long double kXgk[8] = {
    0.991455371120812639206854697526329L, 0.949107912342758524526189684047851L,
    0.864864423359769072789712788640926L, 0.741531185599394439863864773280788L,
    0.586087235467691130294144838258730L, 0.405845151377397166906606412076961L,
    0.207784955007898467600689403773245L, 0.0L};
constexpr long double kWgk[8] = {
    0.022935322010529224963732008058970L, 0.063092092629978553290700663189204L,
    0.104790010322250183839876322541518L, 0.140653259715525918745189590510238L,
    0.169004726639267902826583426598550L, 0.190350578064785409913256402421014L,
    0.204432940075298892414161999234649L, 0.209482141084727828012999174891714L};
constexpr long double kWg[4] = {
    0.129484966168869693270611432679082L, 0.279705391489276667901467771423780L,
    0.381830050505118944950369775488975L, 0.417959183673469387755102040816327L};

struct Panel {
  long double a, b;
  long double value;
  long double error;
  long double mass;  // integral of |f|, for the roundoff floor
  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel gk15(const std::function<long double(long double)>& f, long double a, long double b) {
  const long double center = (a + b) / 2;
  const long double half = (b - a) / 2;
  const long double fc = f(center);
  long double resg = fc * kWg[3];
  long double resk = fc * kWgk[7];
  long double resabs = std::fabs(resk);
  long double fv1[7], fv2[7];
  for (int j = 0; j < 7; ++j) {
    const long double dx = half * kXgk[j];
    fv1[j] = f(center - dx);
    fv2[j] = f(center + dx);
    const long double sum = fv1[j] + fv2[j];
    resk += kWgk[j] * sum;
    resabs += kWgk[j] * (std::fabs(fv1[j]) + std::fabs(fv2[j]));
    if (j % 2 == 1) resg += kWg[j / 2] * sum;
  }
  // QUADPACK-style error scaling against the deviation-from-mean integral.
  const long double mean = resk / 2;
  long double resasc = kWgk[7] * std::fabs(fc - mean);
  for (int j = 0; j < 7; ++j) {
    resasc += kWgk[j] * (std::fabs(fv1[j] - mean) + std::fabs(fv2[j] - mean));
  }
  resasc *= half;
  long double err = std::fabs((resk - resg) * half);
  if (resasc != 0 && err != 0) {
    err = resasc * std::min(1.0L, std::pow(200 * err / resasc, 1.5L));
  }
  return {a, b, resk * half, err, resabs * half};
}

constexpr long double kLongDoubleEps = 1.0842021724855044e-19L;

struct AdaptiveSums {
  long double value = 0;
  long double error = 0;
  long double mass = 0;
  int panels = 0;
  bool converged = true;
};

struct Segment {
  std::function<long double(long double)> f;
  long double a, b;
};

// One global refinement loop across all segments: the stopping rule uses the
// combined value, so cancellation between segments cannot end refinement
// early. Refinement also stops at the long-double roundoff floor of the
// accumulated |f| mass, past which subdividing only shuffles noise.
AdaptiveSums adapt(const std::vector<Segment>& segments, double abs_tol,
                   const QuadratureOptions& options) {
  struct QueueEntry {
    Panel panel;
    std::size_t segment;
    bool operator<(const QueueEntry& other) const { return panel < other.panel; }
  };
  std::priority_queue<QueueEntry> queue;
  long double value = 0, error = 0, mass = 0;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    Panel panel = gk15(segments[i].f, segments[i].a, segments[i].b);
    value += panel.value;
    error += panel.error;
    mass += panel.mass;
    queue.push({panel, i});
  }
  int panels = static_cast<int>(segments.size());
  const auto bound = [&] {
    const long double tolerance =
        std::max(static_cast<long double>(abs_tol),
                 static_cast<long double>(options.rel_tol) * std::fabs(value));
    return std::max(tolerance, 100 * kLongDoubleEps * mass);
  };
  while (error > bound() && panels < options.max_panels) {
    const QueueEntry worst = queue.top();
    queue.pop();
    const auto& f = segments[worst.segment].f;
    const long double mid = (worst.panel.a + worst.panel.b) / 2;
    const Panel left = gk15(f, worst.panel.a, mid);
    const Panel right = gk15(f, mid, worst.panel.b);
    value += left.value + right.value - worst.panel.value;
    error += left.error + right.error - worst.panel.error;
    mass += left.mass + right.mass - worst.panel.mass;
    queue.push({left, worst.segment});
    queue.push({right, worst.segment});
    ++panels;
  }
  return {value, error, mass, panels, error <= bound()};
}

// The integrand e^{-z} z^g * prod_i poly_i(z) keeps its polynomial factors
// separate: Horner per factor, multiplied as values. Expanding the product
// first would square the coefficient-cancellation mass and put an
// eps * sum |c_k| Gamma(k+g+1) floor on designed-zero integrals; factored
// evaluation keeps that floor orders of magnitude lower.
struct DensityIntegrandParts {
  std::vector<std::vector<long double>> factors;  // ascending coefficients each
  long double exponent;                           // power of z at the origin
};

long double horner(const std::vector<long double>& coeffs, long double z) {
  long double acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::vector<long double> to_float_coeffs(const Poly& p) {
  std::vector<long double> out;
  out.reserve(static_cast<std::size_t>(p.degree()) + 1);
  for (int k = 0; k <= p.degree(); ++k) out.push_back(to_long_double(p.coefficient(k)));
  return out;
}

long double factored_value(const DensityIntegrandParts& parts, long double z) {
  long double acc = 1;
  for (const auto& factor : parts.factors) acc *= horner(factor, z);
  return acc;
}

// Integral of parts over (0, inf): head (0,1] via the substitution z = u^k
// that removes the endpoint power, tail [1, Z] with a certified cutoff.
QuadratureResult integrate_density_product(const DensityIntegrandParts& parts, double tol,
                                           const QuadratureOptions& options) {
  for (const auto& factor : parts.factors) {
    if (factor.empty()) return {0.0, 0.0, 0, true};
  }
  const long double g = parts.exponent;
  const auto f = [&parts, g](long double z) {
    return std::exp(-z) * std::pow(z, g) * factored_value(parts, z);
  };

  // Head: z = u^k with k(g+1) >= 2 so the transformed integrand is C^0 at 0.
  const int k = std::max(1, static_cast<int>(std::ceil(2.0L / (g + 1))));
  const auto head = [&parts, g, k](long double u) {
    if (u <= 0) return 0.0L;
    const long double z = std::pow(u, static_cast<long double>(k));
    return k * std::pow(u, k * (g + 1) - 1) * std::exp(-z) * factored_value(parts, z);
  };

  // Tail cutoff: |prod poly_i(z)| <= C z^d for z >= 1 with C the product of
  // the coefficient-sum bounds, and the incomplete-Gamma remainder obeys
  // int_Z^inf z^a e^-z dz <= 2 Z^a e^-Z once Z >= 2(a+1).
  long double coeff_sum = 1;
  long double degree_sum = 0;
  for (const auto& factor : parts.factors) {
    long double sum = 0;
    for (long double c : factor) sum += std::fabs(c);
    coeff_sum *= sum;
    degree_sum += static_cast<long double>(factor.size() - 1);
  }
  const long double a_exp = degree_sum + std::max(g, 0.0L);
  const double tail_eps = std::max(tol * 0.05, 1e-30);
  long double cutoff = std::max(60.0L, 2 * (a_exp + 1));
  while (2 * coeff_sum * std::exp(a_exp * std::log(cutoff) - cutoff) > tail_eps) cutoff *= 1.5L;

  const AdaptiveSums sums = adapt({{head, 0.0L, 1.0L}, {f, 1.0L, cutoff}}, tol, options);

  QuadratureResult result;
  result.value = static_cast<double>(sums.value);
  result.abs_error_estimate = static_cast<double>(sums.error + tail_eps +
                                                  50 * kLongDoubleEps * sums.mass);
  result.subdivisions = sums.panels;
  result.reliable = sums.converged;
  return result;
}

}  // namespace

QuadratureResult adaptive_integrate(const std::function<long double(long double)>& f,
                                    long double a, long double b, double abs_tol,
                                    const QuadratureOptions& options) {
  const AdaptiveSums sums = adapt({{f, a, b}}, abs_tol, options);
  QuadratureResult result;
  result.value = static_cast<double>(sums.value);
  result.abs_error_estimate =
      static_cast<double>(sums.error + 50 * kLongDoubleEps * sums.mass);
  result.subdivisions = sums.panels;
  result.reliable = sums.converged;
  return result;
}

double eval_density(int s, const Rational& beta, double z) {
  require_admissible(s, beta);
  // Closed-form route: (-1)^s s! e^{-z} z^{beta-s} L[s, beta-s](2z). Kept as a
  // separate float path from eval_weighted(density(...)) so the two can
  // cross-check each other.
  const Poly lag = laguerre(s, beta - s);
  long double acc = 0;
  const long double two_z = 2.0L * z;
  for (int k = lag.degree(); k >= 0; --k) {
    acc = acc * two_z + to_long_double(lag.coefficient(k));
  }
  long double sign_factorial = s % 2 == 0 ? 1.0L : -1.0L;
  for (int j = 2; j <= s; ++j) sign_factorial *= j;
  const long double power = to_long_double(beta - s);
  return static_cast<double>(sign_factorial * std::exp(static_cast<long double>(-z)) *
                             std::pow(static_cast<long double>(z), power) * acc);
}

double eval_weighted(const WeightedExpr& w, double z) {
  long double acc = 0;
  for (int k = w.poly.degree(); k >= 0; --k) {
    acc = acc * z + to_long_double(w.poly.coefficient(k));
  }
  return static_cast<double>(std::exp(to_long_double(w.rate) * z) *
                             std::pow(static_cast<long double>(z), to_long_double(w.power)) * acc);
}

QuadratureResult quad_moment(int n, int s, const Rational& beta, double tol,
                             const QuadratureOptions& options) {
  require_admissible(s, beta);
  const WeightedExpr d = density(s, beta);
  DensityIntegrandParts parts;
  parts.factors.push_back(to_float_coeffs(d.poly));
  parts.exponent = to_long_double(d.power) + n;  // z^n folds into the power
  return integrate_density_product(parts, tol, options);
}

QuadratureResult quad_inner_product(const Poly& p, const Poly& q, int s, const Rational& beta,
                                    double tol, const QuadratureOptions& options) {
  require_admissible(s, beta);
  const WeightedExpr d = density(s, beta);
  DensityIntegrandParts parts;
  parts.factors.push_back(to_float_coeffs(d.poly));
  parts.factors.push_back(to_float_coeffs(p));
  parts.factors.push_back(to_float_coeffs(q));
  parts.exponent = to_long_double(d.power);
  return integrate_density_product(parts, tol, options);
}

double gamma_value_to_double(const GammaValue& value) {
  return to_double(value.coeff()) * std::tgamma(to_double(value.beta()) + 1.0);
}

}  // namespace mcw
