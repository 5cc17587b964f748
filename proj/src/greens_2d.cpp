#include "coulgreen/greens_2d.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "coulgreen/errors.hpp"
#include "coulgreen/recurrence_solutions.hpp"
#include "coulgreen/weight_quadrature.hpp"

namespace coulgreen {

std::string to_string(ParameterSet s) { return s == ParameterSet::kFirst ? "first" : "alternative"; }

std::string describe(ParameterSet s, bool general_c) {
  if (general_c) return "A_xi=0, x_n=2k*rho, B_m=theta^-(2m+1)(zeta-1)/(chi-1)(chi/zeta)^(m+1)";
  if (s == ParameterSet::kFirst) return "A_xi=0, x_n=2*pi*i*rho0, A_eta=k/(i*pi), y_n=0, B=D=1";
  return "A_xi=1, x_n=2*pi*i*rho0, A_eta=k/(i*pi), y_n=0, B=D=1";
}

namespace {

void require_2d_order(int N) {
  if (N < 1 || N > 12) throw DimensionError("2D block order must be in [1, 12]");
}

}  // namespace

GreensBlock2D convolve_with_eta(const PhysicalParams& p, double t0, int N,
                                const QuadratureConfig& cfg, const EtaFactor& eta,
                                bool ablate_pole_term) {
  require_2d_order(N);
  PhysicalParams pt = p;
  pt.t = t0;
  const DerivedParams d = derive_params(pt);
  const Complex zeta = d.zeta;
  const size_t NN = size_t(N) * size_t(N);
  const size_t dim = NN * NN;

  GreensBlock2D g;
  g.params = pt;
  g.order = N;
  g.quadrature = cfg;
  g.pole_term_ablated = ablate_pole_term;
  auto flat = [&](int n1, int n2, int m1, int m2) { return g.index(n1, n2, m1, m2); };

  const IntegralResult r = pv_integrate(
      [&](double tau, std::span<Complex> out) {
        const std::vector<Complex> pr = regular_sequence(tau, zeta, N - 1);
        const Complex rho = weight_rho_reflected(tau, zeta);
        std::vector<Complex> e(NN);
        eta(tau, e);
        for (int n1 = 0; n1 < N; ++n1)
          for (int m1 = 0; m1 < N; ++m1) {
            const Complex w = rho * pr[size_t(n1)] * pr[size_t(m1)];
            for (int n2 = 0; n2 < N; ++n2)
              for (int m2 = 0; m2 < N; ++m2)
                out[flat(n1, n2, m1, m2)] = w * e[size_t(n2 * N + m2)];
          }
      },
      dim, cfg);

  std::vector<Complex> eta0(NN);
  eta(0.0, eta0);
  g.elements.assign(dim, Complex{});
  const Complex lead = kI * (zeta - 1.0) / zeta;
  double scale = 0.0;
  for (int n1 = 0; n1 < N; ++n1)
    for (int m1 = 0; m1 < N; ++m1) {
      const Complex pref = lead / ipow(zeta, m1) * ipow(d.theta, n1 - m1);
      scale = std::max(scale, std::abs(pref));
      const double sign = ((n1 + m1) % 2 == 0) ? 1.0 : -1.0;
      for (int n2 = 0; n2 < N; ++n2)
        for (int m2 = 0; m2 < N; ++m2) {
          Complex v = r.values[flat(n1, n2, m1, m2)];
          if (!ablate_pole_term) v -= 0.5 * kI * sign * eta0[size_t(n2 * N + m2)];
          g.elements[flat(n1, n2, m1, m2)] = pref * v;
        }
    }
  g.error_estimate = scale * r.error_estimate;
  g.cutoff = r.cutoff;
  g.evaluations = r.evaluations;
  g.formula = "G=(i/zeta^m1)((zeta-1)/zeta)theta^(n1-m1)[PV int rho p_n1 p_m1 g_eta - (i/2)(-1)^(n1+m1) g_eta(tau=0)]";
  return g;
}

GreensBlock2D convolve_c0(const PhysicalParams& p, double t0, int N, const QuadratureConfig& cfg,
                          const Convolution2DOptions& opt) {
  if (p.C != 0.0) throw DomainError("convolve_c0 requires C = 0");
  // The gauge part of the A_xi term is y int p_nu p_mu g_eta(t0 - t) dt; p_nu p_mu
  // grows polynomially along the real line, so for constant y it diverges.
  if (opt.parameter_set == ParameterSet::kAlternative && opt.xi_gauge_y != Complex{})
    throw DomainError("a constant xi-side gauge makes the alternative-set integral diverge");
  PhysicalParams pt = p;
  pt.t = t0;
  pt.validate();
  const EtaFactor eta = [pt, t0, N](double t, std::span<Complex> out) {
    const GreensBlock1D ge = g_eta_block(pt, t0 - t, N, EtaPath::kConjugate);
    std::copy(ge.elements.begin(), ge.elements.end(), out.begin());
  };
  GreensBlock2D g = convolve_with_eta(pt, t0, N, cfg, eta, opt.ablate_pole_term);
  g.parameter_set = opt.parameter_set;
  g.xi_gauge_y = opt.xi_gauge_y;
  g.formula = "C=0 convolution, eta factor conj(g_xi(t0-t)); " + describe(opt.parameter_set, false);

  if (opt.parameter_set == ParameterSet::kAlternative) {
    // A_xi = 1 adds A_eta int g_xi(t) g_eta(t0 - t) dt, which h annihilates.
    const size_t NN = size_t(N) * size_t(N);
    const IntegralResult extra = tail_integrate(
        [pt, t0, N, &g](double t, std::span<Complex> out) {
          const GreensBlock1D gx = g_xi_block(pt, t, N);
          const GreensBlock1D ge = g_eta_block(pt, t0 - t, N, EtaPath::kConjugate);
          for (int n1 = 0; n1 < N; ++n1)
            for (int n2 = 0; n2 < N; ++n2)
              for (int m1 = 0; m1 < N; ++m1)
                for (int m2 = 0; m2 < N; ++m2)
                  out[g.index(n1, n2, m1, m2)] = gx.at(n1, m1) * ge.at(n2, m2);
        },
        NN * NN, cfg);
    const Complex a_eta = pt.k / (kI * std::numbers::pi);
    for (size_t i = 0; i < g.elements.size(); ++i) g.elements[i] += a_eta * extra.values[i];
    g.error_estimate += std::abs(a_eta) * extra.error_estimate;
    g.evaluations += extra.evaluations;
    g.cutoff = std::max(g.cutoff, extra.cutoff);
  }
  return g;
}

GreensBlock2D convolve_general(const PhysicalParams& p, double t0, int N,
                               const QuadratureConfig& cfg, const Convolution2DOptions& opt) {
  if (p.C == 0.0) throw DomainError("convolve_general requires C != 0 (use convolve_c0)");
  if (opt.parameter_set != ParameterSet::kFirst)
    throw DomainError("only the first parameter set is available for C != 0");
  PhysicalParams pt = p;
  pt.t = t0;
  const DerivedParams d = derive_params(pt);
  const PhysicalParams mirror = pt.eta_mirror();
  const double shift = t0 / d.root;
  const EtaFactor eta = [mirror, shift, N](double tau, std::span<Complex> out) {
    const GreensBlock1D ge = g_xi_block_at_tau(mirror, tau - shift, N);
    std::copy(ge.elements.begin(), ge.elements.end(), out.begin());
  };
  GreensBlock2D g = convolve_with_eta(pt, t0, N, cfg, eta, opt.ablate_pole_term);
  g.parameter_set = ParameterSet::kFirst;
  g.formula = "C!=0 convolution over real tau, eta factor at tau - t0/sqrt(1-2C/k^2); " +
              describe(ParameterSet::kFirst, true);
  return g;
}

GreensBlock2D convolve(const PhysicalParams& p, double t0, int N, const QuadratureConfig& cfg,
                       const Convolution2DOptions& opt) {
  return p.C == 0.0 ? convolve_c0(p, t0, N, cfg, opt) : convolve_general(p, t0, N, cfg, opt);
}

double residual_identity_2d(const GreensBlock2D& block, const PhysicalParams& p) {
  const int N = block.order;
  if (N < 3) throw DimensionError("2D residual needs block order >= 3");
  if (block.elements.size() != size_t(N) * N * N * N) throw DimensionError("2D block has wrong size");
  p.validate();
  const double half_c = p.C / (2.0 * p.b);
  const double shifted = p.b + half_c, reduced = p.b - half_c;
  const double k = p.k;
  // one-dimensional pieces without the 2kt shift
  auto xi_diag = [&](int n) { return Complex(shifted, k) + 2.0 * shifted * n; };
  auto eta_diag = [&](int n) { return Complex(shifted, -k) + 2.0 * shifted * n; };
  auto xi_sub = [&](int n) { return Complex(reduced, -k) * double(n); };
  auto xi_sup = [&](int n) { return Complex(reduced, k) * double(n); };
  auto eta_sub = [&](int n) { return Complex(reduced, k) * double(n); };
  auto eta_sup = [&](int n) { return Complex(reduced, -k) * double(n); };
  const double shift = 2.0 * k * p.t;
  double worst = 0.0;
  for (int n1 = 0; n1 <= N - 2; ++n1)
    for (int n2 = 0; n2 <= N - 2; ++n2)
      for (int m1 = 0; m1 < N; ++m1)
        for (int m2 = 0; m2 < N; ++m2) {
          Complex v = (xi_diag(n1) + eta_diag(n2) + shift) * block.at(n1, n2, m1, m2);
          v += xi_sup(n1 + 1) * block.at(n1 + 1, n2, m1, m2);
          v += eta_sup(n2 + 1) * block.at(n1, n2 + 1, m1, m2);
          if (n1 > 0) v += xi_sub(n1) * block.at(n1 - 1, n2, m1, m2);
          if (n2 > 0) v += eta_sub(n2) * block.at(n1, n2 - 1, m1, m2);
          if (n1 == m1 && n2 == m2) v -= 1.0;
          worst = std::max(worst, std::abs(v));
        }
  return worst;
}

Complex b_m_factor(const PhysicalParams& p, int m) {
  const DerivedParams d = derive_params(p);
  return (d.zeta - 1.0) / (d.chi - 1.0) * ipow(d.chi / d.zeta, m + 1) / ipow(d.theta, 2 * m + 1);
}

double b_m_bookkeeping_residual(const PhysicalParams& p, int N) {
  const DerivedParams d = derive_params(p);
  double worst = 0.0;
  for (int n = 0; n < N; ++n)
    for (int m = 0; m < N; ++m) {
      // x_n = 2k rho turns (i/2k) into i; compare with the closed prefactor
      const Complex built = kI * (d.chi - 1.0) / d.chi * ipow(d.theta, n + m + 1) /
                            ipow(d.chi, m) * b_m_factor(p, m);
      const Complex closed = kI / ipow(d.zeta, m) * (d.zeta - 1.0) / d.zeta * ipow(d.theta, n - m);
      worst = std::max(worst, std::abs(built - closed) / std::abs(closed));
    }
  return worst;
}

SeparationReport verify_separation_conditions(const PhysicalParams& p, int N,
                                              const QuadratureConfig& cfg) {
  if (p.C != 0.0) throw DomainError("separation conditions are checked at C = 0");
  if (N < 1) throw DimensionError("order must be at least 1");
  const size_t NN = size_t(N) * size_t(N);
  SeparationReport rep;
  rep.order = N;

  const GramMatrix gram = gram_matrix(p, N, cfg);
  rep.first_u = gram.elements;
  rep.first_u_deviation = gram.deviation_from_identity();
  for (int n = 0; n < N; ++n)
    for (int m = 0; m < N; ++m)
      if (n != m) rep.first_offdiag = std::max(rep.first_offdiag, std::abs(gram.at(n, m)));

  const double t0 = p.t;
  const IntegralResult r = tail_integrate(
      [p, t0, N, NN](double t, std::span<Complex> out) {
        const GreensBlock1D gx = g_xi_block(p, t, N);
        const GreensBlock1D ge = g_eta_block(p, t0 - t, N, EtaPath::kConjugate);
        std::copy(gx.elements.begin(), gx.elements.end(), out.begin());
        std::copy(ge.elements.begin(), ge.elements.end(), out.begin() + long(NN));
      },
      2 * NN, cfg);
  const Complex a_eta = p.k / (kI * std::numbers::pi);
  rep.alt_u.resize(NN);
  rep.alt_v.resize(NN);
  for (size_t i = 0; i < NN; ++i) {
    rep.alt_u[i] = gram.elements[i] + a_eta * r.values[i];
    rep.alt_v[i] = a_eta * r.values[NN + i];
  }
  for (int n = 0; n < N; ++n)
    for (int m = 0; m < N; ++m) {
      const size_t i = size_t(n * N + m);
      if (n == m)
        rep.alt_sum_deviation = std::max(rep.alt_sum_deviation, std::abs(rep.alt_u[i] + rep.alt_v[i] - 1.0));
      else
        rep.alt_offdiag = std::max({rep.alt_offdiag, std::abs(rep.alt_u[i]), std::abs(rep.alt_v[i])});
    }
  rep.error_estimate = std::abs(a_eta) * r.error_estimate + gram.error_estimate;
  return rep;
}

}  // namespace coulgreen
