#pragma once

#include <vector>

#include "coulgreen/special_functions.hpp"

namespace coulgreen {

/// Basis scale b, momentum k, Coulomb-type parameter t (t0 in 2D use) and the
/// strength C of the linear potential.
struct PhysicalParams {
  double b = 1.0;
  double k = 1.0;
  double t = 0.0;
  double C = 0.0;

  /// Throws DomainError unless b > 0, k != 0, everything finite and
  /// 1 - 2C/k^2 > 0.
  void validate() const;

  /// Parameters of the eta operator: k -> -k, t -> -t (kt is unchanged).
  PhysicalParams eta_mirror() const { return {b, -k, -t, C}; }
};

/// Complex quantities derived from (b, k, C). For C = 0 they degenerate
/// exactly: lambda = 0, gamma = k, theta = 1, chi = zeta, tau(t) = t.
struct DerivedParams {
  Complex zeta;
  Complex lambda;
  Complex gamma;
  Complex theta;
  Complex chi;
  double root = 1.0;  // sqrt(1 - 2C/k^2)

  Complex tau_of(Complex t) const;
  Complex t_of_tau(Complex tau) const;
};

DerivedParams derive_params(const PhysicalParams& p);

/// Rows n = 0..order of a tridiagonal operator:
///   row n:  a_n w_{n-1} + b_n w_n + d_{n+1} w_{n+1}.
/// sub holds a_1..a_order, diag b_0..b_order, super d_1..d_order.
class TridiagonalOperator {
 public:
  TridiagonalOperator() = default;
  TridiagonalOperator(std::vector<Complex> sub, std::vector<Complex> diag,
                      std::vector<Complex> super);

  int order() const { return static_cast<int>(diag_.size()) - 1; }
  Complex a(int n) const;
  Complex b(int n) const;
  Complex d(int n) const;
  /// Matrix element (row, col); zero outside the band.
  Complex element(int row, int col) const;
  bool symmetric(double tol = 0.0) const;

  const std::vector<Complex>& sub() const { return sub_; }
  const std::vector<Complex>& diag() const { return diag_; }
  const std::vector<Complex>& super() const { return super_; }

 private:
  std::vector<Complex> sub_, diag_, super_;
};

/// h + 2kt (+ C Q when C != 0) in the Sturmian basis, materialized to order N.
TridiagonalOperator build_h(const PhysicalParams& p, int N);

/// Matrix of the coordinate operator; symmetric.
TridiagonalOperator build_q_matrix(double b, int N);

/// Z h with Z = diag(s^{-n}): beta_n = b_n / s^n, alpha_n = d_n / s^{n-1}.
/// The scaling base s is chi (which equals zeta at C = 0).
TridiagonalOperator symmetrize(const TridiagonalOperator& h, const DerivedParams& d);

/// Integer power by repeated multiplication (exact for base 1).
Complex ipow(Complex base, int n);

}  // namespace coulgreen
