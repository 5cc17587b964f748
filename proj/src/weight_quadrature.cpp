#include "coulgreen/weight_quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "coulgreen/errors.hpp"
#include "coulgreen/recurrence_solutions.hpp"

namespace coulgreen {

namespace {

constexpr double kPi = std::numbers::pi;

Complex log_minus_zeta(Complex zeta) { return principal_log(-zeta); }

}  // namespace

void validate_weight_zeta(Complex zeta) {
  if (!std::isfinite(zeta.real()) || !std::isfinite(zeta.imag())) throw DomainError("zeta must be finite");
  if (zeta == Complex{}) throw DomainError("zeta must be non-zero");
  if (zeta.imag() == 0.0 && zeta.real() > 0.0)
    throw DomainError("weight requires |arg(-zeta)| < pi (zeta on the positive real axis)");
}

Complex weight_rho(Complex t, Complex zeta) {
  validate_weight_zeta(zeta);
  if (t == Complex{}) throw PoleError("weight has a pole at t = 0");
  const Complex it = kI * t;
  const Complex lg = log_gamma(1.0 - it) + log_gamma(it) + it * log_minus_zeta(zeta);
  return std::exp(lg) / (2.0 * kPi * kI);
}

Complex weight_rho_reflected(Complex t, Complex zeta) {
  validate_weight_zeta(zeta);
  if (t == Complex{}) throw PoleError("weight has a pole at t = 0");
  const Complex l = log_minus_zeta(zeta);
  // -(-zeta)^{it} / (2 sinh(pi t)) written with a decaying exponential so that
  // large |t| neither overflows nor loses the phase.
  const Complex pt = kPi * t;
  const double sgn = pt.real() >= 0.0 ? 1.0 : -1.0;
  // 2 sinh(x) = sgn e^{sgn x} (1 - e^{-2 sgn x})
  const Complex denom_tail = 1.0 - std::exp(-2.0 * sgn * pt);
  return -sgn * std::exp(kI * t * l - sgn * pt) / denom_tail;
}

Complex weight_rho_piecewise(double t, Complex zeta) {
  validate_weight_zeta(zeta);
  if (zeta.imag() == 0.0) throw DomainError("piecewise weight needs Im(zeta) != 0");
  if (t == 0.0) throw PoleError("weight has a pole at t = 0");
  const Complex zit = principal_power(zeta, kI * t);
  if (std::arg(zeta) < 0.0) return zit / (1.0 - std::exp(2.0 * kPi * t));
  return zit / (std::exp(-2.0 * kPi * t) - 1.0);
}

double weight_rho_unit(double t, double phi) {
  if (!(phi > -kPi && phi < 0.0)) throw DomainError("unit-circle weight needs phi in (-pi, 0)");
  if (t == 0.0) throw PoleError("weight has a pole at t = 0");
  // e^{-phi t}/(1 - e^{2 pi t}) = -e^{-(phi + pi) t} / (2 sinh(pi t))
  return -std::exp(-(phi + kPi) * t) / (2.0 * std::sinh(kPi * t));
}

Complex weight_norm_closed(Complex zeta) {
  if (zeta == Complex{1.0, 0.0}) throw PoleError("closed form is singular at zeta = 1");
  return kI * zeta / (1.0 - zeta);
}

NormIntegral weight_norm_integral(Complex zeta, const QuadratureConfig& cfg) {
  validate_weight_zeta(zeta);
  const IntegralResult r = pv_integrate(
      [zeta](double t, std::span<Complex> out) { out[0] = weight_rho_reflected(t, zeta); }, 1, cfg);
  return {r.values[0] - 0.5 * kI, r.error_estimate, r.cutoff};
}

Complex residue_partial_sum(Complex zeta, int terms) {
  const double mod = std::abs(zeta);
  if (mod == 1.0) throw DomainError("residue series needs |zeta| != 1");
  if (terms < 0) throw DomainError("negative term count");
  Complex sum{};
  if (mod > 1.0) {
    Complex term{1.0, 0.0};
    for (int n = 0; n < terms; ++n, term /= zeta) sum += term;
    return -kI * sum;
  } else {
    Complex term = zeta;
    for (int n = 1; n <= terms; ++n, term *= zeta) sum += term;
  }
  return kI * sum;
}

Complex residue_series(Complex zeta) {
  const double mod = std::abs(zeta);
  if (mod == 1.0 || zeta == Complex{}) throw DomainError("residue series needs 0 < |zeta| != 1");
  const double ratio = mod > 1.0 ? 1.0 / mod : mod;
  // terms shrink geometrically by `ratio`; stop once below 1e-17 of the sum
  Complex sum{};
  Complex term = mod > 1.0 ? Complex{1.0, 0.0} : zeta;
  for (int n = 0; n < 10'000'000; ++n) {
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum)) return (mod > 1.0 ? -kI : kI) * sum;
    term = mod > 1.0 ? term / zeta : term * zeta;
  }
  throw ConvergenceError("residue series converges too slowly", std::pow(ratio, 1e7));
}

double GramMatrix::deviation_from_identity() const {
  double worst = 0.0;
  for (int n = 0; n < order; ++n)
    for (int m = 0; m < order; ++m)
      worst = std::max(worst, std::abs(at(n, m) - (n == m ? 1.0 : 0.0)));
  return worst;
}

GramMatrix gram_matrix(Complex zeta, int N, const QuadratureConfig& cfg) {
  validate_weight_zeta(zeta);
  if (N < 1) throw DimensionError("Gram order must be at least 1");
  const size_t n_sq = size_t(N) * size_t(N);
  const IntegralResult r = pv_integrate(
      [zeta, N](double t, std::span<Complex> out) {
        const std::vector<Complex> p = regular_sequence(t, zeta, N - 1);
        const Complex rho = weight_rho_reflected(t, zeta);
        for (int n = 0; n < N; ++n)
          for (int m = 0; m < N; ++m) out[size_t(n * N + m)] = rho * p[size_t(n)] * p[size_t(m)];
      },
      n_sq, cfg);
  GramMatrix g;
  g.order = N;
  g.elements.resize(n_sq);
  const Complex lead = kI * (zeta - 1.0) / zeta;
  double scale = 0.0;
  for (int n = 0; n < N; ++n) {
    const Complex pref = lead / ipow(zeta, n);
    scale = std::max(scale, std::abs(pref));
    for (int m = 0; m < N; ++m) {
      const double sign = ((n + m) % 2 == 0) ? 1.0 : -1.0;
      g.elements[size_t(n * N + m)] = pref * (r.values[size_t(n * N + m)] - 0.5 * kI * sign);
    }
  }
  g.error_estimate = scale * r.error_estimate;
  return g;
}

GramMatrix gram_matrix(const PhysicalParams& p, int N, const QuadratureConfig& cfg) {
  return gram_matrix(derive_params(p).zeta, N, cfg);
}

std::vector<AppendixIntegral> appendix_orthogonality_block(const PhysicalParams& p, int N,
                                                           const QuadratureConfig& cfg) {
  const DerivedParams d = derive_params(p);
  if (p.C != 0.0) throw DomainError("appendix orthogonality is defined for C = 0");
  if (N < 1) throw DimensionError("appendix block order must be at least 1");
  const Complex zeta = d.zeta;
  const Complex lead = kI / (2.0 * p.k) * (zeta - 1.0) / zeta;
  const size_t n_sq = size_t(N) * size_t(N);
  const IntegralResult r = tail_integrate(
      [=](double t, std::span<Complex> out) {
        const std::vector<Complex> pv = regular_sequence(t, zeta, N - 1);
        const std::vector<Complex> qv = second_sequence(t, zeta, N - 1);
        for (int n = 0; n < N; ++n)
          for (int m = 0; m < N; ++m) {
            const int nu = std::min(n, m), mu = std::max(n, m);
            out[size_t(n * N + m)] = lead / ipow(zeta, m) * pv[size_t(nu)] * qv[size_t(mu)];
          }
      },
      n_sq, cfg);
  const Complex scale = 2.0 * kI * p.k / kPi;
  std::vector<AppendixIntegral> out(n_sq);
  for (size_t i = 0; i < n_sq; ++i)
    out[i] = {scale * r.values[i], std::abs(scale) * r.error_estimate, r.cutoff};
  return out;
}

AppendixIntegral appendix_orthogonality(const PhysicalParams& p, int n, int m,
                                        const QuadratureConfig& cfg) {
  if (n < 0 || m < 0) throw DimensionError("negative index");
  const int N = std::max(n, m) + 1;
  return appendix_orthogonality_block(p, N, cfg)[size_t(n * N + m)];
}

}  // namespace coulgreen
