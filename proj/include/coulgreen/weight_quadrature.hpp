#pragma once

#include <vector>

#include "coulgreen/operator_matrices.hpp"
#include "coulgreen/quadrature.hpp"

namespace coulgreen {

/// Weight Gamma(1 - it) Gamma(it) (-zeta)^{it} / (2 pi i), evaluated through
/// log-Gamma (valid for complex t away from its poles t = i m).
/// Throws PoleError at t = 0 and DomainError unless |arg(-zeta)| < pi.
Complex weight_rho(Complex t, Complex zeta);

/// Reflected form -(-zeta)^{it} / (2 sinh(pi t)); same function, cheaper.
Complex weight_rho_reflected(Complex t, Complex zeta);

/// Piecewise exponential form for Im(zeta) != 0:
///   zeta^{it} / (1 - e^{2 pi t})   for arg(zeta) in (-pi, 0),
///   zeta^{it} / (e^{-2 pi t} - 1)  for arg(zeta) in (0, pi).
Complex weight_rho_piecewise(double t, Complex zeta);

/// Unit-circle reduction e^{-phi t} / (1 - e^{2 pi t}), phi in (-pi, 0).
double weight_rho_unit(double t, double phi);

/// Residue of the weight at t = 0.
inline double weight_rho_residue() { return -0.5 / 3.14159265358979323846; }

/// Closed form i zeta / (1 - zeta) of the contour integral of the weight.
Complex weight_norm_closed(Complex zeta);

struct NormIntegral {
  Complex value;
  double error_estimate = 0.0;
  double cutoff = 0.0;
};

/// Principal value plus the -i/2 half-residue term. Throws DomainError when the
/// weight does not decay along the real line (zeta on [0, inf)).
NormIntegral weight_norm_integral(Complex zeta, const QuadratureConfig& cfg);

/// Summed residue series: -i sum_{n>=0} zeta^{-n} (|zeta| > 1; residues
/// -zeta^{-n}/(2 pi) at t = i n, counter-clockwise) or i sum_{n>=1} zeta^n
/// (|zeta| < 1). Both equal i zeta / (1 - zeta). DomainError on the unit circle.
Complex residue_series(Complex zeta);

/// Partial sum with the given number of terms.
Complex residue_partial_sum(Complex zeta, int terms);

struct GramMatrix {
  int order = 0;
  std::vector<Complex> elements;  // row-major order x order
  double error_estimate = 0.0;
  Complex at(int n, int m) const { return elements[size_t(n) * size_t(order) + size_t(m)]; }
  /// max |G - I|.
  double deviation_from_identity() const;
};

/// (i / zeta^n)((zeta - 1)/zeta)[PV int rho p_n p_m dt - (i/2)(-1)^{n+m}] for
/// n, m < N, with zeta from the parameters and p_n = p_n(t; zeta) on the real t line.
GramMatrix gram_matrix(const PhysicalParams& p, int N, const QuadratureConfig& cfg);

/// Same for an explicitly given zeta.
GramMatrix gram_matrix(Complex zeta, int N, const QuadratureConfig& cfg);

struct AppendixIntegral {
  Complex value;  // (2ik/pi) int g^xi_nm(t) dt
  double error_estimate = 0.0;
  double cutoff = 0.0;
};

/// (2ik/pi) times the real-line integral of the C = 0 one-dimensional Green's
/// element g^xi_nm(t), with the tail treated per cfg.oscillatory_strategy.
AppendixIntegral appendix_orthogonality(const PhysicalParams& p, int n, int m,
                                        const QuadratureConfig& cfg);

/// All (n, m) < N at once (shares the integrand evaluations).
std::vector<AppendixIntegral> appendix_orthogonality_block(const PhysicalParams& p, int N,
                                                           const QuadratureConfig& cfg);

/// Checks that zeta is admissible for the weight: |arg(-zeta)| < pi, zeta != 0.
void validate_weight_zeta(Complex zeta);

}  // namespace coulgreen
