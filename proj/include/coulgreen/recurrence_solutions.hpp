#pragma once

#include <vector>

#include "coulgreen/operator_matrices.hpp"

namespace coulgreen {

/// Regular and second solutions of the (C-dependent) three-term recurrence,
/// indices 0..order.
struct SolutionPair {
  std::vector<Complex> regular;  // s_n (= p_n at C = 0)
  std::vector<Complex> second;   // c_n (= q_n at C = 0)
  Complex wronskian;             // closed-form constant b - C/2b - ik
  PhysicalParams params;
  double t = 0.0;
};

/// p_n(tau; zeta), n = 0..N, by forward recurrence from p_0 = 1. The
/// recurrence is written in zeta-normalized form so it holds for complex tau
/// and any zeta. Throws PoleError when i*tau is within 1e-6 of a positive
/// integer.
std::vector<Complex> regular_sequence(Complex tau, Complex zeta, int N);

/// Terminating hypergeometric form of p_n with its error estimate.
HypergeometricValue regular_closed_form(Complex tau, Complex zeta, int n);

/// Closed-form representations of q_n(tau; zeta).
enum class SecondForm {
  kZeta,     // argument zeta
  kPfaff,    // argument zeta / (zeta - 1)
  kInverse,  // connection through 1/zeta plus a multiple of p_n
};
HypergeometricValue second_closed_form(Complex tau, Complex zeta, int n, SecondForm form);

/// q_n(tau; zeta), n = 0..N. Each term comes from the better-conditioned
/// closed form; once no closed form reaches 1e-13 the sequence continues by
/// forward recurrence with a running error bound (ConvergenceError above 1e-10).
std::vector<Complex> second_sequence(Complex tau, Complex zeta, int N);

/// p_n(tau(t); zeta) with zeta and tau taken from the parameters (tau = t at C = 0).
/// The recurrence values are returned; their agreement with the closed form
/// is asserted (InternalError on disagreement).
std::vector<Complex> p_sequence(const PhysicalParams& p, double t, int N);

std::vector<Complex> q_sequence(const PhysicalParams& p, double t, int N);

/// s_n = theta^n p_n(tau; zeta), c_n = theta^{n+1} q_n(tau; zeta).
SolutionPair s_c_sequences(const PhysicalParams& p, double t, int N);

/// alpha_n [c_n s_{n-1} - c_{n-1} s_n] with alpha_n = d_n / chi^{n-1}.
Complex wronskian(const SolutionPair& pair, int n);

/// max over n in [1, N-1] of |a_n w_{n-1} + b_n w_n + d_{n+1} w_{n+1}| /
/// (max(|w_{n-1}|, |w_n|, |w_{n+1}|) |b_n|).
double recurrence_residual(const TridiagonalOperator& h, const std::vector<Complex>& w);

/// Outgoing reference solution exp(lambda xi) 1F1(i tau, 1; -i gamma xi).
Complex reference_solution(const PhysicalParams& p, double xi);

/// Orthonormal Sturmian function sqrt(2b) exp(-b x) L_n(2 b x) for n = 0..N.
std::vector<double> sturmian_functions(double b, double x, int N);

/// Factor f with <phi_n, u> = f * coef_n (coef = p_n at C = 0, s_n otherwise).
Complex expansion_factor(const PhysicalParams& p);

/// max over the grid of |sum_{n<=N} f coef_n phi_n(xi) - u(xi)|.
double expansion_check(const PhysicalParams& p, double t, int N, const std::vector<double>& grid);

/// max over n <= N of |<phi_n, u> - f coef_n| / max(1, |f coef_n|), with the
/// projections computed by quadrature.
double projection_check(const PhysicalParams& p, double t, int N);

}  // namespace coulgreen
