#include "coulgreen/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "coulgreen/errors.hpp"
#include "coulgreen/greens_1d.hpp"
#include "coulgreen/greens_2d.hpp"
#include "coulgreen/matrix_io.hpp"
#include "coulgreen/recurrence_solutions.hpp"
#include "coulgreen/weight_quadrature.hpp"

namespace coulgreen {

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> suites = {"recurrence", "wronskian", "inverse-1d", "gram",
                                                  "norm-integral", "appendix", "inverse-2d",
                                                  "separation"};
  return suites;
}

namespace {

CheckResult make(const std::string& suite, const std::string& name, const std::string& identity,
                 double value, double tol, std::string detail = {}) {
  return {suite, name, identity, value, tol, value <= tol, std::move(detail)};
}

int order_or(const VerifyOptions& opt, int fallback) { return opt.order > 0 ? opt.order : fallback; }

std::vector<CheckResult> recurrence_suite(const VerifyOptions& o) {
  const int N = order_or(o, 50);
  const PhysicalParams& p = o.params;
  const DerivedParams d = derive_params(p);
  const Complex tau = d.tau_of(p.t);
  const std::vector<Complex> rec = regular_sequence(tau, d.zeta, N);
  double worst = 0.0;
  for (int n = 0; n <= N; ++n) {
    const HypergeometricValue cf = regular_closed_form(tau, d.zeta, n);
    worst = std::max(worst, std::abs(cf.value - rec[size_t(n)]) / std::abs(rec[size_t(n)]));
  }
  const SolutionPair sc = s_c_sequences(p, p.t, N);
  const TridiagonalOperator h = build_h(p, N);
  std::vector<CheckResult> out;
  out.push_back(make("recurrence", "regular_closed_form_agreement",
                     "forward recurrence of p_n equals the terminating 2F1 form", worst, 1e-9));
  out.push_back(make("recurrence", "regular_residual", "a_n w_{n-1} + b_n w_n + d_{n+1} w_{n+1} = 0 for s_n",
                     recurrence_residual(h, sc.regular), 1e-10));
  out.push_back(make("recurrence", "second_residual", "a_n w_{n-1} + b_n w_n + d_{n+1} w_{n+1} = 0 for c_n",
                     recurrence_residual(h, sc.second), 1e-10));
  const Complex ic = h.b(0) * sc.second[0] + h.d(1) * sc.second[1];
  out.push_back(make("recurrence", "second_initial_condition", "b_0 c_0 + d_1 c_1 = b - C/2b - ik",
                     std::abs(ic - sc.wronskian) / std::abs(sc.wronskian), 1e-10));
  return out;
}

std::vector<CheckResult> wronskian_suite(const VerifyOptions& o) {
  const int N = order_or(o, 100);
  const SolutionPair sc = s_c_sequences(o.params, o.params.t, N);
  double worst = 0.0;
  for (int n = 1; n <= N; ++n)
    worst = std::max(worst, std::abs(wronskian(sc, n) - sc.wronskian) / std::abs(sc.wronskian));
  return {make("wronskian", "constancy", "alpha_n (c_n s_{n-1} - c_{n-1} s_n) = b - C/2b - ik for all n",
               worst, 1e-9, "n <= " + std::to_string(N))};
}

std::vector<CheckResult> inverse1d_suite(const VerifyOptions& o) {
  const int N = order_or(o, 40) + 1;  // one extra row so rows/columns below the order are covered
  const PhysicalParams& p = o.params;
  const GreensBlock1D gx = g_xi_block(p, p.t, N);
  const GreensBlock1D ge = g_eta_block(p, p.t, N);
  const GreensBlock1D gs = gauge_shift(gx, o.gauge_y);
  std::vector<CheckResult> out;
  out.push_back(make("inverse-1d", "xi", "(h_xi + 2kt + CQ) g_xi = I on rows n < order",
                     inverse_residual(gx, operator_for(gx)), 1e-9));
  out.push_back(make("inverse-1d", "eta", "(h_eta + 2kt + CQ) g_eta = I on rows n < order",
                     inverse_residual(ge, operator_for(ge)), 1e-9));
  out.push_back(make("inverse-1d", "xi_gauge_shifted", "gauge-shifted g_xi still inverts the operator",
                     inverse_residual(gs, operator_for(gs)), 1e-9, gs.gauge_description()));
  if (p.C == 0.0) {
    const GreensBlock1D sub = g_eta_block(p, p.t, N, EtaPath::kSubstitution);
    double conj_dev = 0.0, path_dev = 0.0;
    for (size_t i = 0; i < gx.elements.size(); ++i) {
      conj_dev = std::max(conj_dev, std::abs(ge.elements[i] - std::conj(gx.elements[i])));
      path_dev = std::max(path_dev, std::abs(sub.elements[i] - ge.elements[i]) /
                                        std::max(1e-300, std::abs(ge.elements[i])));
    }
    out.push_back(make("inverse-1d", "eta_conjugation", "g_eta = conj(g_xi) at C = 0", conj_dev, 1e-12));
    out.push_back(make("inverse-1d", "eta_substitution_path",
                       "substitution t->-t, k->-k agrees with conjugation", path_dev, 1e-10));
  }
  return out;
}

std::vector<CheckResult> gram_suite(const VerifyOptions& o) {
  const int N = order_or(o, 8);
  const GramMatrix g = gram_matrix(o.params, N, o.quadrature);
  return {make("gram", "orthonormality", "(i/zeta^n)((zeta-1)/zeta)[PV int rho p_n p_m - (i/2)(-1)^{n+m}] = delta",
               g.deviation_from_identity(), 1e-6,
               "quadrature estimate " + format_double(g.error_estimate))};
}

std::vector<CheckResult> norm_suite(const VerifyOptions& o) {
  std::vector<CheckResult> out;
  const Complex zeta = derive_params(o.params).zeta;
  const NormIntegral ni = weight_norm_integral(zeta, o.quadrature);
  out.push_back(make("norm-integral", "parameter_zeta", "PV int rho - i/2 = i zeta/(1 - zeta)",
                     std::abs(ni.value - weight_norm_closed(zeta)), 1e-6));
  const Complex off_points[] = {std::polar(2.0, std::numbers::pi / 4.0),
                                std::polar(0.5, -std::numbers::pi / 3.0)};
  const char* labels[] = {"zeta=2exp(i pi/4)", "zeta=0.5exp(-i pi/3)"};
  for (int i = 0; i < 2; ++i) {
    const Complex z = off_points[i];
    const NormIntegral ni2 = weight_norm_integral(z, o.quadrature);
    out.push_back(make("norm-integral", labels[i], "PV int rho - i/2 = i zeta/(1 - zeta)",
                       std::abs(ni2.value - weight_norm_closed(z)), 1e-6));
    out.push_back(make("norm-integral", std::string(labels[i]) + "_residue_series",
                       "residue series equals the principal-value route",
                       std::abs(residue_series(z) - ni2.value), 1e-8));
  }
  return out;
}

std::vector<CheckResult> appendix_suite(const VerifyOptions& o) {
  const int N = order_or(o, 5);
  PhysicalParams p = o.params;
  if (p.C != 0.0) throw DomainError("appendix suite requires C = 0");
  const auto block = appendix_orthogonality_block(p, N, o.quadrature);
  double worst = 0.0, est = 0.0;
  for (int n = 0; n < N; ++n)
    for (int m = 0; m < N; ++m) {
      const auto& a = block[size_t(n * N + m)];
      worst = std::max(worst, std::abs(a.value - (n == m ? 1.0 : 0.0)));
      est = std::max(est, a.error_estimate);
    }
  return {make("appendix", "orthogonality", "(2ik/pi) int g_xi_nm dt = delta_nm", worst, 1e-3,
               "tail estimate " + format_double(est))};
}

std::vector<CheckResult> inverse2d_suite(const VerifyOptions& o) {
  const bool c0 = o.params.C == 0.0;
  const int N = order_or(o, c0 ? 5 : 4);
  Convolution2DOptions copt;
  copt.ablate_pole_term = o.ablate_pole_term;
  const GreensBlock2D g = convolve(o.params, o.params.t, N, o.quadrature, copt);
  const double tol = c0 ? 1e-5 : 1e-4;
  return {make("inverse-2d", o.ablate_pole_term ? "kronecker_sum_ablated" : "kronecker_sum",
               "h G = I x I on interior rows (h = h_xi x I + I x h_eta + 2kt0 + C(QxI + IxQ))",
               residual_identity_2d(g, g.params), tol,
               "quadrature estimate " + format_double(g.error_estimate))};
}

std::vector<CheckResult> separation_suite(const VerifyOptions& o) {
  const int N = order_or(o, 4);
  const SeparationReport r = verify_separation_conditions(o.params, N, o.quadrature);
  return {
      make("separation", "first_set_u", "A_eta D int g~xi = delta (A_xi = 0)", r.first_u_deviation, 1e-5),
      make("separation", "first_set_offdiag", "off-diagonal leakage of the first condition", r.first_offdiag, 1e-5),
      make("separation", "alternative_u_plus_v", "U + V = 1 with A_xi = 1", r.alt_sum_deviation, 1e-2,
           "quadrature estimate " + format_double(r.error_estimate)),
  };
}

}  // namespace

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opt) {
  opt.params.validate();
  opt.quadrature.validate();
  try {
    if (suite == "recurrence") return recurrence_suite(opt);
    if (suite == "wronskian") return wronskian_suite(opt);
    if (suite == "inverse-1d") return inverse1d_suite(opt);
    if (suite == "gram") return gram_suite(opt);
    if (suite == "norm-integral") return norm_suite(opt);
    if (suite == "appendix") return appendix_suite(opt);
    if (suite == "inverse-2d") return inverse2d_suite(opt);
    if (suite == "separation") return separation_suite(opt);
  } catch (const ConvergenceError& e) {
    return {{suite, "numerical_failure", "evaluation did not converge", e.achieved(), 0.0, false, e.what()}};
  }
  throw DomainError("unknown suite: " + suite);
}

nlohmann::json report_json(const std::vector<CheckResult>& results, const VerifyOptions& opt) {
  nlohmann::json checks = nlohmann::json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    checks.push_back({{"suite", r.suite},
                      {"name", r.name},
                      {"identity", r.identity},
                      {"value", r.value},
                      {"tolerance", r.tolerance},
                      {"passed", r.passed},
                      {"detail", r.detail}});
  }
  return {{"library_version", COULGREEN_VERSION},
          {"params", to_json(opt.params)},
          {"quadrature", to_json(opt.quadrature)},
          {"ablate_pole_term", opt.ablate_pole_term},
          {"checks", checks},
          {"passed", all}};
}

}  // namespace coulgreen
