// Command-line surface for the deformed-Laguerre polynomial families:
// exact coefficient tables, moments, Gram weights, pointwise evaluation, and
// the full identity-verification sweep.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "mcw/deformation.hpp"
#include "mcw/errors.hpp"
#include "mcw/gram.hpp"
#include "mcw/laguerre.hpp"
#include "mcw/measure.hpp"
#include "mcw/quadrature.hpp"
#include "mcw/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitConfigError = 2;
constexpr int kExitDegenerateGram = 3;

struct OutputTarget {
  std::string path;  // empty = stdout

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream file(path);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    file << text;
  }
};

mcw::Poly family_poly(const std::string& family, int n, int s, const mcw::Rational& beta,
                      int alpha) {
  if (family == "L") return mcw::laguerre(n, beta);
  if (family == "M") {
    return mcw::apply_deformation(mcw::laguerre(n, beta), mcw::Rational(s),
                                  alpha >= 0 ? mcw::Alpha::plus : mcw::Alpha::minus);
  }
  if (family == "C") return mcw::c_poly(n, s, beta);
  if (family == "W") return mcw::w_poly(n, s, beta);
  throw mcw::ParseError("unknown family '" + family + "' at position 0", 0);
}

bool family_uses_measure(const std::string& family) { return family == "C" || family == "W"; }

int cmd_table(const std::string& family, const std::string& beta_text, int s, int nmax,
              int alpha, const std::string& format, const OutputTarget& out) {
  const mcw::Rational beta = mcw::parse_rational(beta_text);
  if (family_uses_measure(family)) mcw::require_admissible(s, beta);
  std::vector<std::vector<std::string>> rows;
  for (int n = 0; n <= nmax; ++n) {
    const mcw::Poly p = family_poly(family, n, s, beta, alpha);
    std::vector<std::string> coeffs;
    for (int k = 0; k <= p.degree(); ++k) coeffs.push_back(mcw::to_string(p.coefficient(k)));
    if (p.is_zero()) coeffs.push_back("0");
    rows.push_back(std::move(coeffs));
  }
  if (format == "json") {
    nlohmann::json doc = nlohmann::json::array();
    for (int n = 0; n <= nmax; ++n) {
      doc.push_back({{"family", family},
                     {"n", n},
                     {"beta", mcw::to_string(beta)},
                     {"s", s},
                     {"coeffs", rows[static_cast<std::size_t>(n)]}});
    }
    out.write(doc.dump(2) + "\n");
  } else {
    std::ostringstream text;
    text << "family,n,beta,s";
    for (int k = 0; k <= nmax; ++k) text << ",coeff_" << k;
    text << "\n";
    for (int n = 0; n <= nmax; ++n) {
      text << family << "," << n << "," << mcw::to_string(beta) << "," << s;
      for (int k = 0; k <= nmax; ++k) {
        const auto& coeffs = rows[static_cast<std::size_t>(n)];
        text << "," << (k < static_cast<int>(coeffs.size()) ? coeffs[static_cast<std::size_t>(k)] : "");
      }
      text << "\n";
    }
    out.write(text.str());
  }
  return kExitOk;
}

int cmd_moments(const std::string& beta_text, int s, int nmax, const std::string& format,
                const OutputTarget& out) {
  const mcw::Rational beta = mcw::parse_rational(beta_text);
  mcw::require_admissible(s, beta);
  std::ostringstream csv;
  nlohmann::json doc = nlohmann::json::array();
  csv << "n,coeff,value,float\n";
  for (int n = 0; n <= nmax; ++n) {
    const mcw::GammaValue m = mcw::moment(n, s, beta);
    const double value = mcw::gamma_value_to_double(m);
    if (format == "json") {
      doc.push_back({{"n", n},
                     {"coeff", mcw::to_string(m.coeff())},
                     {"value", m.str()},
                     {"float", value}});
    } else {
      csv << n << "," << mcw::to_string(m.coeff()) << "," << m.str() << ","
          << std::scientific << value << "\n" << std::defaultfloat;
    }
  }
  out.write(format == "json" ? doc.dump(2) + "\n" : csv.str());
  return kExitOk;
}

int cmd_weights(const std::string& beta_text, int s, int n, const std::string& format,
                const OutputTarget& out) {
  const mcw::Rational beta = mcw::parse_rational(beta_text);
  mcw::require_admissible(s, beta);
  const std::vector<mcw::Rational> w = mcw::weights(n, s, beta);
  if (format == "json") {
    nlohmann::json doc = nlohmann::json::array();
    for (std::size_t i = 0; i < w.size(); ++i) {
      doc.push_back({{"i", i}, {"w", mcw::to_string(w[i])}});
    }
    out.write(doc.dump(2) + "\n");
    return kExitOk;
  }
  std::ostringstream csv;
  csv << "i,w\n";
  for (std::size_t i = 0; i < w.size(); ++i) csv << i << "," << mcw::to_string(w[i]) << "\n";
  out.write(csv.str());
  return kExitOk;
}

int cmd_eval(const std::string& family, const std::string& beta_text, int s, int n,
             const std::string& z_text, const OutputTarget& out) {
  const mcw::Rational beta = mcw::parse_rational(beta_text);
  if (family_uses_measure(family)) mcw::require_admissible(s, beta);
  const mcw::Poly p = family_poly(family, n, s, beta, -1);
  double value = 0;
  try {
    // Exact evaluation when z is rational text, float Horner otherwise.
    value = mcw::to_double(p.evaluate(mcw::parse_rational(z_text)));
  } catch (const mcw::ParseError&) {
    std::size_t used = 0;
    const double z = std::stod(z_text, &used);
    if (used != z_text.size()) throw;
    long double acc = 0;
    for (int k = p.degree(); k >= 0; --k) acc = acc * z + mcw::to_long_double(p.coefficient(k));
    value = static_cast<double>(acc);
  }
  std::ostringstream text;
  text.precision(17);
  text << value << "\n";
  out.write(text.str());
  return kExitOk;
}

int cmd_verify(const mcw::GridSpec& grid, const std::string& perturb, const std::string& format,
               const OutputTarget& out) {
  mcw::Perturbation perturbation = mcw::Perturbation::none;
  if (perturb == "ode-sign") {
    perturbation = mcw::Perturbation::ode_sign;
  } else if (!perturb.empty()) {
    throw mcw::ParseError("unknown perturbation '" + perturb + "' at position 0", 0);
  }
  const std::vector<mcw::CheckResult> results = mcw::run_verification(grid, perturbation);
  if (format == "json") {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& r : results) {
      doc.push_back({{"suite", r.suite},
                     {"name", r.name},
                     {"identity", r.identity},
                     {"points", r.points},
                     {"pass", r.pass},
                     {"max_deviation", r.max_deviation},
                     {"note", r.note}});
    }
    out.write(doc.dump(2) + "\n");
  } else {
    std::ostringstream text;
    mcw::print_report(text, results);
    const bool ok = mcw::all_passed(results);
    text << (ok ? "all checks passed\n" : "verification FAILED\n");
    out.write(text.str());
  }
  return mcw::all_passed(results) ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deformed Laguerre polynomial families M, C, W: exact tables, moments, "
               "Gram weights, and identity verification"};
  app.require_subcommand(1);

  std::string family = "L", beta_text = "0", format = "csv", z_text = "1", perturb;
  OutputTarget out;
  int s = 0, n = 0, nmax = 10, alpha = -1;
  mcw::GridSpec grid;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", out.path, "Write output to this file instead of stdout");
  };

  CLI::App* table = app.add_subcommand("table", "Coefficient table of a polynomial family");
  table->add_option("--family", family, "L, M, C, or W")
      ->required()
      ->check(CLI::IsMember({"L", "M", "C", "W"}));
  table->add_option("--beta", beta_text, "Parameter beta as p/q");
  table->add_option("--s", s, "Deformation strength (nonnegative integer)")->check(CLI::NonNegativeNumber);
  table->add_option("--nmax", nmax, "Largest degree")->check(CLI::NonNegativeNumber);
  table->add_option("--alpha", alpha, "Deformation sign for family M (+1 or -1)")
      ->check(CLI::IsMember({-1, 1}));
  add_common(table);

  CLI::App* moments = app.add_subcommand("moments", "Exact moments of the measure");
  moments->add_option("--beta", beta_text, "Parameter beta as p/q");
  moments->add_option("--s", s, "Measure index")->check(CLI::NonNegativeNumber);
  moments->add_option("--nmax", nmax, "Largest moment order")->check(CLI::NonNegativeNumber);
  add_common(moments);

  CLI::App* weights_cmd = app.add_subcommand("weights", "Gram weights for C[n]");
  weights_cmd->add_option("--beta", beta_text, "Parameter beta as p/q");
  weights_cmd->add_option("--s", s, "Measure index")->check(CLI::NonNegativeNumber);
  weights_cmd->add_option("--n", n, "Target degree")->required()->check(CLI::PositiveNumber);
  add_common(weights_cmd);

  CLI::App* eval = app.add_subcommand("eval", "Evaluate a family polynomial at a point");
  eval->add_option("--family", family, "L, M, C, or W")
      ->required()
      ->check(CLI::IsMember({"L", "M", "C", "W"}));
  eval->add_option("--beta", beta_text, "Parameter beta as p/q");
  eval->add_option("--s", s, "Deformation strength / measure index")->check(CLI::NonNegativeNumber);
  eval->add_option("--n", n, "Degree")->check(CLI::NonNegativeNumber);
  eval->add_option("--z", z_text, "Evaluation point (rational p/q or float)");
  eval->add_option("--out", out.path, "Write output to this file instead of stdout");

  CLI::App* verify = app.add_subcommand("verify", "Run every identity suite over the grid");
  verify->add_option("--nmax", grid.nmax, "Largest polynomial degree")->check(CLI::NonNegativeNumber);
  verify->add_option("--smax", grid.smax, "Largest deformation strength")->check(CLI::NonNegativeNumber);
  std::vector<std::string> beta_texts;
  verify->add_option("--beta", beta_texts, "Grid beta values (repeatable, p/q)");
  verify->add_option("--order", grid.order, "Series truncation order")->check(CLI::NonNegativeNumber);
  verify->add_option("--tol", grid.tol, "Numeric coherence tolerance");
  verify->add_option("--max-panels", grid.quadrature.max_panels, "Adaptive quadrature panel cap");
  verify->add_flag("--skip-numeric", [&grid](std::int64_t) { grid.with_numeric = false; },
                   "Skip the quadrature coherence sweep");
  verify->add_option("--perturb", perturb, "Fault injection (ode-sign)");
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  try {
    if (table->parsed()) return cmd_table(family, beta_text, s, nmax, alpha, format, out);
    if (moments->parsed()) return cmd_moments(beta_text, s, nmax, format, out);
    if (weights_cmd->parsed()) return cmd_weights(beta_text, s, n, format, out);
    if (eval->parsed()) return cmd_eval(family, beta_text, s, n, z_text, out);
    if (verify->parsed()) {
      if (!beta_texts.empty()) {
        grid.betas.clear();
        for (const auto& text : beta_texts) grid.betas.push_back(mcw::parse_rational(text));
      }
      return cmd_verify(grid, perturb, format, out);
    }
  } catch (const mcw::DegenerateGramError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDegenerateGram;
  } catch (const mcw::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const mcw::IntegrabilityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  }
  return kExitConfigError;
}
