// coulgreen: command-line front end for the parabolic-Sturmian Coulomb Green's
// matrices. Every run is deterministic; the thread count (COULGREEN_THREADS)
// never changes the output.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "coulgreen/errors.hpp"
#include "coulgreen/greens_1d.hpp"
#include "coulgreen/greens_2d.hpp"
#include "coulgreen/matrix_io.hpp"
#include "coulgreen/operator_matrices.hpp"
#include "coulgreen/verify.hpp"

namespace cg = coulgreen;
using json = nlohmann::json;

namespace {

enum ExitCode { kPass = 0, kVerificationFailure = 1, kValidation = 2, kNonConvergence = 3 };

struct RunConfig {
  // t = 0.7 keeps the default run away from the degenerate tau = 0 point
  cg::PhysicalParams params{1.0, 1.0, 0.7, 0.0};
  std::optional<double> t0;
  int order = 0;  // 0: command default
  std::string variant = "xi";
  cg::Complex gauge_y{0.0, 0.0};
  bool gauge_given = false;
  std::vector<std::string> suites;
  cg::QuadratureConfig quadrature;
  std::string out;
  bool ablate_pole_term = false;
  bool alternative_set = false;
};

cg::Complex parse_complex(const std::string& s) {
  // "re" or "re,im"
  std::istringstream is(s);
  double re = 0.0, im = 0.0;
  char comma = 0;
  if (!(is >> re)) throw cg::DomainError("cannot parse complex value: " + s);
  if (is >> comma) {
    if (comma != ',' || !(is >> im)) throw cg::DomainError("cannot parse complex value: " + s);
  }
  return {re, im};
}

cg::Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_string()) return parse_complex(j.get<std::string>());
  if (j.is_array() && j.size() == 2) return {j[0].get<double>(), j[1].get<double>()};
  if (j.is_object()) return {j.value("re", 0.0), j.value("im", 0.0)};
  throw cg::DomainError("gauge_y: expected number, \"re,im\", [re, im] or {re, im}");
}

void apply_config_file(const std::string& path, RunConfig& rc) {
  std::ifstream in(path);
  if (!in) throw cg::DomainError("cannot open config file: " + path);
  json j;
  try {
    j = json::parse(in, nullptr, true, /*ignore_comments=*/true);
    if (!j.is_object()) throw cg::DomainError("config file must hold a JSON object");
    if (j.contains("b")) rc.params.b = j["b"].get<double>();
    if (j.contains("k")) rc.params.k = j["k"].get<double>();
    if (j.contains("t")) rc.params.t = j["t"].get<double>();
    if (j.contains("t0")) rc.t0 = j["t0"].get<double>();
    if (j.contains("C")) rc.params.C = j["C"].get<double>();
    if (j.contains("N")) rc.order = j["N"].get<int>();
    if (j.contains("variant")) rc.variant = j["variant"].get<std::string>();
    if (j.contains("gauge_y")) {
      rc.gauge_y = complex_from_json(j["gauge_y"]);
      rc.gauge_given = true;
    }
    if (j.contains("suite")) {
      if (j["suite"].is_array())
        rc.suites = j["suite"].get<std::vector<std::string>>();
      else
        rc.suites = {j["suite"].get<std::string>()};
    }
    if (j.contains("out")) rc.out = j["out"].get<std::string>();
    if (j.contains("ablate_pole_term")) rc.ablate_pole_term = j["ablate_pole_term"].get<bool>();
    if (j.contains("alt_param_set")) rc.alternative_set = j["alt_param_set"].get<bool>();
    if (j.contains("quadrature")) rc.quadrature = cg::quadrature_from_json(j["quadrature"], rc.quadrature);
    if (j.contains("pv_eps")) rc.quadrature.pv_epsilon_schedule = j["pv_eps"].get<std::vector<double>>();
    if (j.contains("tail_T")) rc.quadrature.tail_cutoff = j["tail_T"].get<double>();
    if (j.contains("nodes")) rc.quadrature.panel_nodes = j["nodes"].get<int>();
  } catch (const json::exception& e) {
    throw cg::DomainError("config file " + path + ": " + e.what());
  }
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw cg::DomainError("cannot open output file: " + path);
  out << text;
  if (!out) throw cg::DomainError("write failed: " + path);
}

std::string matrix_text(const cg::MatrixFile& m) {
  std::ostringstream os;
  cg::write_matrix(os, m);
  return os.str();
}

int cmd_derive_params(const RunConfig& rc) {
  rc.params.validate();
  const cg::DerivedParams d = cg::derive_params(rc.params);
  json j = {{"params", cg::to_json(rc.params)}, {"derived", cg::to_json(d)}};
  j["derived"]["tau_at_t"] = cg::complex_to_json(d.tau_of(rc.params.t));
  emit(rc.out, j.dump(2) + "\n");
  return kPass;
}

int cmd_greens1d(const RunConfig& rc) {
  rc.params.validate();
  const int N = rc.order > 0 ? rc.order : 10;
  const cg::Variant v = cg::variant_from_string(rc.variant);
  cg::GreensBlock1D g = v == cg::Variant::kXi ? cg::g_xi_block(rc.params, rc.params.t, N)
                                               : cg::g_eta_block(rc.params, rc.params.t, N);
  if (rc.gauge_given && rc.gauge_y != cg::Complex(0.0, 0.0)) g = cg::gauge_shift(g, rc.gauge_y);
  emit(rc.out, matrix_text(cg::to_matrix_file(g)));
  return kPass;
}

int cmd_greens2d(const RunConfig& rc) {
  cg::PhysicalParams p = rc.params;
  if (rc.t0) p.t = *rc.t0;
  p.validate();
  rc.quadrature.validate();
  const int N = rc.order > 0 ? rc.order : 3;
  cg::Convolution2DOptions opt;
  opt.parameter_set = rc.alternative_set ? cg::ParameterSet::kAlternative : cg::ParameterSet::kFirst;
  opt.ablate_pole_term = rc.ablate_pole_term;
  if (rc.gauge_given) opt.xi_gauge_y = rc.gauge_y;
  const cg::GreensBlock2D g = cg::convolve(p, p.t, N, rc.quadrature, opt);
  emit(rc.out, matrix_text(cg::to_matrix_file(g)));
  return kPass;
}

int cmd_verify(const RunConfig& rc) {
  cg::VerifyOptions opt;
  opt.params = rc.params;
  if (rc.t0) opt.params.t = *rc.t0;
  opt.order = rc.order;
  opt.quadrature = rc.quadrature;
  opt.ablate_pole_term = rc.ablate_pole_term;
  if (rc.gauge_given) opt.gauge_y = rc.gauge_y;
  const std::vector<std::string>& suites = rc.suites.empty() ? cg::verify_suites() : rc.suites;

  std::vector<cg::CheckResult> all;
  for (const auto& s : suites) {
    auto r = cg::run_suite(s, opt);
    all.insert(all.end(), r.begin(), r.end());
  }
  json report = cg::report_json(all, opt);
  report["suites"] = suites;
  emit(rc.out, report.dump(2) + "\n");

  bool passed = true;
  bool nonconverged = false;
  for (const auto& c : all) {
    passed = passed && c.passed;
    nonconverged = nonconverged || c.name == "numerical_failure";
    std::fprintf(stderr, "%-5s %-14s %-32s %.3e (tol %.1e)\n", c.passed ? "PASS" : "FAIL",
                 c.suite.c_str(), c.name.c_str(), c.value, c.tolerance);
  }
  if (passed) return kPass;
  return nonconverged ? kNonConvergence : kVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parabolic-Sturmian Coulomb Green's matrices"};
  app.set_version_flag("--version", std::string(COULGREEN_VERSION));
  app.require_subcommand(1);

  RunConfig rc;
  std::string config_path;

  // Flags are stored in optionals so that a config file can be applied first
  // and explicit flags override it afterwards.
  std::optional<double> b, k, t, t0, C, tail_T;
  std::optional<int> N, nodes;
  std::optional<std::string> variant, gauge_y, out, tail_strategy;
  std::vector<double> pv_eps;
  std::vector<std::string> suites;
  bool ablate = false, alt = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON config file (flags override it)");
    sub->add_option("--b", b, "Sturmian scale b > 0");
    sub->add_option("--k", k, "wave number k != 0");
    sub->add_option("--t", t, "Coulomb parameter t");
    sub->add_option("--C", C, "separation constant C (1 - 2C/k^2 >= 0)");
    sub->add_option("--out", out, "output path (default stdout)");
  };
  auto add_blocks = [&](CLI::App* sub) {
    sub->add_option("--N", N, "block order");
    sub->add_option("--gauge-y", gauge_y, "gauge constant y, \"re\" or \"re,im\"");
  };
  auto add_quadrature = [&](CLI::App* sub) {
    sub->add_option("--t0", t0, "total Coulomb parameter of the 2D problem");
    sub->add_option("--pv-eps", pv_eps, "principal-value exclusion schedule (decreasing)")->delimiter(',');
    sub->add_option("--tail-T", tail_T, "largest |t| visited by the quadrature");
    sub->add_option("--nodes", nodes, "Gauss-Legendre nodes per panel");
    sub->add_option("--tail-strategy", tail_strategy, "richardson | partial-sum-averaging");
    sub->add_flag("--ablate-pole-term", ablate, "drop the half-residue term (negative control)");
  };

  CLI::App* derive = app.add_subcommand("derive-params", "print the derived parameters");
  add_common(derive);

  CLI::App* g1 = app.add_subcommand("greens1d", "write a one-dimensional Green's block");
  add_common(g1);
  add_blocks(g1);
  g1->add_option("--variant", variant, "xi | eta")->check(CLI::IsMember({"xi", "eta"}));

  CLI::App* g2 = app.add_subcommand("greens2d", "write a convolved two-dimensional Green's block");
  add_common(g2);
  add_blocks(g2);
  add_quadrature(g2);
  g2->add_flag("--alt-param-set", alt, "use the alternative separation parameter set (C = 0 only)");

  CLI::App* ver = app.add_subcommand("verify", "run verification suites");
  add_common(ver);
  add_blocks(ver);
  add_quadrature(ver);
  ver->add_option("--suite", suites, "suite name (repeatable); default all")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kValidation;
  }

  try {
    if (!config_path.empty()) apply_config_file(config_path, rc);
    if (b) rc.params.b = *b;
    if (k) rc.params.k = *k;
    if (t) rc.params.t = *t;
    if (C) rc.params.C = *C;
    if (t0) rc.t0 = *t0;
    if (N) rc.order = *N;
    if (variant) rc.variant = *variant;
    if (gauge_y) {
      rc.gauge_y = parse_complex(*gauge_y);
      rc.gauge_given = true;
    }
    if (out) rc.out = *out;
    if (!pv_eps.empty()) rc.quadrature.pv_epsilon_schedule = pv_eps;
    if (tail_T) rc.quadrature.tail_cutoff = *tail_T;
    if (nodes) rc.quadrature.panel_nodes = *nodes;
    if (tail_strategy) rc.quadrature.oscillatory_strategy = cg::tail_strategy_from_string(*tail_strategy);
    if (!suites.empty()) rc.suites = suites;
    rc.ablate_pole_term = rc.ablate_pole_term || ablate;
    rc.alternative_set = rc.alternative_set || alt;
    rc.quadrature.validate();

    if (*derive) return cmd_derive_params(rc);
    if (*g1) return cmd_greens1d(rc);
    if (*g2) return cmd_greens2d(rc);
    if (*ver) return cmd_verify(rc);
  } catch (const cg::DomainError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kValidation;
  } catch (const cg::ConvergenceError& e) {
    std::fprintf(stderr, "non-convergence: %s (achieved %.3e)\n", e.what(), e.achieved());
    return kNonConvergence;
  } catch (const cg::Error& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return kNonConvergence;
  }
  return kValidation;
}
