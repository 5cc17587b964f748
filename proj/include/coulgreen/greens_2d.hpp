#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "coulgreen/greens_1d.hpp"
#include "coulgreen/quadrature.hpp"

namespace coulgreen {

/// Choice of the factors (A_xi, x_n, A_eta, y_n, B, D) splitting the 2D
/// inverse into one-dimensional pieces.
enum class ParameterSet {
  kFirst,        // A_xi = 0, x_n = 2 pi i rho, A_eta = k/(i pi), y_n = 0, B = D = 1
  kAlternative,  // A_xi = 1, otherwise as kFirst (C = 0 only)
};

std::string to_string(ParameterSet s);
/// Human-readable record of the factors of a set.
std::string describe(ParameterSet s, bool general_c);

/// G_{n1 n2, m1 m2} for indices in [0, order), flattened row-major over
/// ((n1, n2), (m1, m2)): index ((n1 N + n2) N + m1) N + m2.
struct GreensBlock2D {
  PhysicalParams params;  // params.t is t0
  int order = 0;
  std::vector<Complex> elements;
  QuadratureConfig quadrature;
  ParameterSet parameter_set = ParameterSet::kFirst;
  bool pole_term_ablated = false;
  Complex xi_gauge_y{0.0, 0.0};
  double error_estimate = 0.0;
  double cutoff = 0.0;
  long evaluations = 0;
  std::string formula;

  std::size_t index(int n1, int n2, int m1, int m2) const {
    const auto N = static_cast<std::size_t>(order);
    return ((std::size_t(n1) * N + std::size_t(n2)) * N + std::size_t(m1)) * N + std::size_t(m2);
  }
  Complex at(int n1, int n2, int m1, int m2) const { return elements[index(n1, n2, m1, m2)]; }
};

struct Convolution2DOptions {
  ParameterSet parameter_set = ParameterSet::kFirst;
  /// Drop the -(i/2)(-1)^{n1+m1} pole term (negative control; the result is wrong).
  bool ablate_pole_term = false;
  /// Gauge constant added to the xi-side second solution. It only enters when
  /// A_xi != 0, and there a constant y diverges, so the alternative set rejects it;
  /// with the first set it is recorded but inert.
  Complex xi_gauge_y{0.0, 0.0};
};

/// Eta factor as a function of the real integration variable: fills the
/// order x order block (row-major).
using EtaFactor = std::function<void(double tau, std::span<Complex> out)>;

/// C = 0 convolution; the eta factor comes from the conjugation path.
GreensBlock2D convolve_c0(const PhysicalParams& p, double t0, int N, const QuadratureConfig& cfg,
                          const Convolution2DOptions& opt = {});

/// C != 0 convolution over the real tau line.
GreensBlock2D convolve_general(const PhysicalParams& p, double t0, int N,
                               const QuadratureConfig& cfg, const Convolution2DOptions& opt = {});

/// Dispatches on C.
GreensBlock2D convolve(const PhysicalParams& p, double t0, int N, const QuadratureConfig& cfg,
                       const Convolution2DOptions& opt = {});

/// First-set convolution with an arbitrary eta factor (probe entry point).
GreensBlock2D convolve_with_eta(const PhysicalParams& p, double t0, int N,
                                const QuadratureConfig& cfg, const EtaFactor& eta,
                                bool ablate_pole_term = false);

/// max over rows (n1, n2) in [0, N-2]^2 and all (m1, m2) of
/// |(h G)_{(n1 n2),(m1 m2)} - delta delta| with
/// h = h_xi x I + I x h_eta + 2k t0 + C (Q x I + I x Q).
double residual_identity_2d(const GreensBlock2D& block, const PhysicalParams& p);

/// Factor B_m obtained for A_xi = 0, x_n = 2k rho at C != 0.
Complex b_m_factor(const PhysicalParams& p, int m);

/// max over n, m < N of the mismatch between the xi-side prefactor built from
/// B_m and the prefactor of the closed convolution form.
double b_m_bookkeeping_residual(const PhysicalParams& p, int N);

struct SeparationReport {
  int order = 0;
  // first set: U = A_eta D int g~xi (V vanishes because A_xi = 0)
  std::vector<Complex> first_u;  // N x N
  double first_u_deviation = 0.0;  // max |U - delta|
  double first_offdiag = 0.0;      // max off-diagonal |U|
  // alternative set
  std::vector<Complex> alt_u;  // N x N
  std::vector<Complex> alt_v;  // N x N
  double alt_sum_deviation = 0.0;  // max over diagonal of |U + V - 1|
  double alt_offdiag = 0.0;        // max off-diagonal |U|, |V|
  double error_estimate = 0.0;     // quadrature estimate of the alternative-set integrals
};

/// Numerical check of the separation conditions at C = 0 for both parameter
/// sets; t0 is taken from p.t.
SeparationReport verify_separation_conditions(const PhysicalParams& p, int N,
                                              const QuadratureConfig& cfg);

}  // namespace coulgreen
