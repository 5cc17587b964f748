#pragma once

#include <complex>
#include <string_view>

namespace coulgreen {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

/// Principal logarithm with arg in (-pi, pi]. A negative real axis point
/// carrying a signed zero imaginary part is placed on the upper lip.
Complex principal_log(Complex z);

/// exp(exponent * Log(base)) on the principal branch. Throws DomainError for a
/// zero base.
Complex principal_power(Complex base, Complex exponent);

/// Principal branch of ln Gamma(z): continuous off the negative real axis and
/// satisfying log_gamma(z + 1) = log_gamma(z) + Log(z).
/// Throws PoleError at non-positive integers.
Complex log_gamma(Complex z);

/// Gamma(z) = exp(log_gamma(z)).
Complex gamma(Complex z);

/// 1 / Gamma(z), which is zero at the poles of Gamma.
Complex rgamma(Complex z);

/// Rising factorial (a)_n as a plain product.
Complex pochhammer(Complex a, int n);

/// Value plus an estimate of its relative error and the evaluation route.
struct HypergeometricValue {
  Complex value;
  double rel_error = 0.0;
  std::string_view method;
};

/// Gauss 2F1(a, b; c; z) on the principal branch (cut along [1, inf)).
///
/// The route is picked from the Maclaurin series (raw or Euler-transformed),
/// the Pfaff map z/(z-1), the non-degenerate members of the 1-z, 1/z, 1/(1-z)
/// and 1-1/z connection formulas, and, when every mapped argument is still
/// close to the unit circle, Taylor continuation of the hypergeometric ODE
/// from |z| = 1/2. Series are summed in extended precision. The returned
/// estimate is honest; no route reaching 1e-10 raises ConvergenceError.
HypergeometricValue gauss_2f1_detail(Complex a, Complex b, Complex c, Complex z);

/// Value-only form of gauss_2f1_detail.
Complex gauss_2f1(Complex a, Complex b, Complex c, Complex z);

/// Confluent 1F1(a; b; z): series for moderate |z|, Poincare asymptotics for
/// large |z|.
HypergeometricValue kummer_1f1_detail(Complex a, Complex b, Complex z);

Complex kummer_1f1(Complex a, Complex b, Complex z);

/// True when z lies within `tol` of a non-positive integer.
bool near_nonpositive_integer(Complex z, double tol = 0.0);

}  // namespace coulgreen
