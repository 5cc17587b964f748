#pragma once

#include <string>
#include <vector>

#include "coulgreen/operator_matrices.hpp"

namespace coulgreen {

enum class Variant { kXi, kEta };

/// How the eta block is produced.
enum class EtaPath {
  kAuto,          // conjugation at C = 0, substitution otherwise
  kConjugate,     // elementwise conjugate of the xi block (C = 0 only)
  kSubstitution,  // xi formula with t -> -t, k -> -k
};

std::string to_string(Variant v);
Variant variant_from_string(const std::string& s);

/// Block g_nm, n, m < order, of the one-dimensional Green's matrix:
///   g_nm = lead * theta^{n+m+1} * chi^{-m} * regular_nu * (second_mu + y regular_mu)
/// with nu = min(n, m), mu = max(n, m) and y the gauge constant.
struct GreensBlock1D {
  PhysicalParams params;  // params.t is the Coulomb parameter of the block
  Variant variant = Variant::kXi;
  int order = 0;
  std::vector<Complex> elements;  // row-major
  Complex gauge_y{0.0, 0.0};
  std::string formula;

  // construction data, kept so the gauge can be changed exactly
  Complex lead;
  Complex theta;
  Complex chi;
  std::vector<Complex> regular;
  std::vector<Complex> second;

  Complex at(int n, int m) const { return elements[size_t(n) * size_t(order) + size_t(m)]; }
  std::string gauge_description() const;
};

/// g^xi block; C = 0 and C != 0 formulas are selected automatically.
GreensBlock1D g_xi_block(const PhysicalParams& p, double t, int N);

/// g^eta block.
GreensBlock1D g_eta_block(const PhysicalParams& p, double t, int N, EtaPath path = EtaPath::kAuto);

/// Block evaluated at a complex spectral variable tau (used by the 2D
/// convolution, where the eta factor is needed at shifted arguments).
GreensBlock1D g_xi_block_at_tau(const PhysicalParams& p, Complex tau, int N);

/// Rebuilds the block with second_mu -> second_mu + y * regular_mu.
GreensBlock1D gauge_shift(const GreensBlock1D& block, Complex y);

/// Operator the block inverts: h(params) for xi, h(eta_mirror(params)) for eta.
TridiagonalOperator operator_for(const GreensBlock1D& block);

/// max over rows n in [0, order-2] and all columns m of
/// |a_n g_{n-1,m} + b_n g_{nm} + d_{n+1} g_{n+1,m} - delta_nm|.
double inverse_residual(const GreensBlock1D& block, const TridiagonalOperator& h);

}  // namespace coulgreen
