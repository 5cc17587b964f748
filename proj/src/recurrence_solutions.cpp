#include "coulgreen/recurrence_solutions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "coulgreen/errors.hpp"
#include "coulgreen/quadrature.hpp"

namespace coulgreen {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kClosedFormTol = 1e-13;
constexpr double kSecondTol = 1e-10;

void reject_near_pole(Complex tau) {
  const Complex itau = kI * tau;
  const double m = std::round(itau.real());
  if (m >= 1.0 && std::abs(itau - Complex(m, 0.0)) < 1e-6)
    throw PoleError("i*tau is within 1e-6 of the positive integer " + std::to_string(int(m)));
}

void require_order(int N) {
  if (N < 0) throw DimensionError("sequence order must be non-negative");
}

// n! / ((1 - i tau)_{n+1}) as a product of bounded factors.
Complex second_prefactor(Complex tau, int n) {
  Complex r = 1.0 / (static_cast<double>(n + 1) - kI * tau);
  for (int j = 1; j <= n; ++j) r *= static_cast<double>(j) / (static_cast<double>(j) - kI * tau);
  return r;
}

// One forward step of the normalized recurrence: returns w_{n+1}.
Complex forward_step(Complex tau, Complex zeta, int n, Complex w_prev, Complex w_cur,
                     double* rounding = nullptr) {
  const Complex t1 = -((1.0 + zeta) * static_cast<double>(n) + 1.0 - kI * (1.0 - zeta) * tau) * w_cur;
  const Complex t2 = -zeta * static_cast<double>(n) * w_prev;
  if (rounding) *rounding = 4.0 * kEps * (std::abs(t1) + std::abs(t2)) / (n + 1);
  return (t1 + t2) / static_cast<double>(n + 1);
}

}  // namespace

std::vector<Complex> regular_sequence(Complex tau, Complex zeta, int N) {
  require_order(N);
  reject_near_pole(tau);
  std::vector<Complex> w(static_cast<size_t>(N) + 1);
  w[0] = 1.0;
  if (N >= 1) w[1] = -(1.0 - kI * (1.0 - zeta) * tau);
  for (int n = 1; n < N; ++n) w[n + 1] = forward_step(tau, zeta, n, w[n - 1], w[n]);
  return w;
}

HypergeometricValue regular_closed_form(Complex tau, Complex zeta, int n) {
  reject_near_pole(tau);
  Complex pref = (n % 2 == 0) ? 1.0 : -1.0;
  for (int j = 1; j <= n; ++j) pref *= (static_cast<double>(j) - kI * tau) / static_cast<double>(j);
  const Complex itau = kI * tau;
  HypergeometricValue h = gauss_2f1_detail(static_cast<double>(-n), itau, itau - double(n), zeta);
  return {pref * h.value, h.rel_error + (n + 1) * kEps, h.method};
}

HypergeometricValue second_closed_form(Complex tau, Complex zeta, int n, SecondForm form) {
  if (n < 0) throw DimensionError("negative index");
  reject_near_pole(tau);
  if (zeta == Complex{} || zeta == Complex{1.0, 0.0}) throw DomainError("zeta must differ from 0 and 1");
  const Complex mz = -zeta;
  if (mz.imag() == 0.0 && mz.real() < 0.0)
    throw DomainError("second solution requires |arg(-zeta)| < pi");
  const Complex itau = kI * tau;
  const double nd = static_cast<double>(n);
  switch (form) {
    case SecondForm::kZeta: {
      const Complex pref = -second_prefactor(tau, n) * ipow(mz, n + 1);
      const HypergeometricValue h = gauss_2f1_detail(1.0 - itau, nd + 1.0, nd + 2.0 - itau, zeta);
      return {pref * h.value, h.rel_error + (n + 2) * kEps, h.method};
    }
    case SecondForm::kPfaff: {
      const Complex w = zeta / (zeta - 1.0);
      const Complex pref = -second_prefactor(tau, n) * ipow(w, n + 1);
      const HypergeometricValue h = gauss_2f1_detail(nd + 1.0, nd + 1.0, nd + 2.0 - itau, w);
      return {pref * h.value, h.rel_error + (n + 2) * kEps, h.method};
    }
    case SecondForm::kInverse: {
      if (near_nonpositive_integer(-itau, 0.0) || near_nonpositive_integer(itau, 0.0))
        throw PoleError("connection form is singular at tau = 0");
      // Gamma(-n - i tau) / Gamma(1 - i tau) = 1 / prod_{j=0}^{n} (j - n - i tau)
      Complex ratio{1.0, 0.0};
      for (int j = 0; j <= n; ++j) ratio /= (static_cast<double>(j - n) - itau);
      const HypergeometricValue h = gauss_2f1_detail(itau, nd + 1.0, nd + 1.0 + itau, 1.0 / zeta);
      Complex fact{1.0, 0.0};
      for (int j = 1; j <= n; ++j) fact *= static_cast<double>(j);
      const Complex first = -fact * ratio * h.value;
      // Gamma(1 - i tau) Gamma(i tau) = pi / sin(pi i tau)
      const Complex reflect = M_PI / std::sin(M_PI * itau);
      const Complex pn = regular_sequence(tau, zeta, n)[static_cast<size_t>(n)];
      const Complex second = -reflect * principal_power(mz, itau) * pn;
      const Complex total = first + second;
      const double err = (std::abs(first) * (h.rel_error + (n + 2) * kEps) +
                          std::abs(second) * (8 + n) * kEps * (1.0 + std::abs(itau) * M_PI)) /
                         std::abs(total);
      return {total, err, h.method};
    }
  }
  throw InternalError("unknown closed form");
}

std::vector<Complex> second_sequence(Complex tau, Complex zeta, int N) {
  require_order(N);
  const std::vector<Complex> p = regular_sequence(tau, zeta, N);
  std::vector<Complex> q(static_cast<size_t>(N) + 1);
  std::vector<double> err(static_cast<size_t>(N) + 1, 0.0);

  struct Injection {
    int index;
    int neighbour;
    double size;
    double denom;  // |p_j q_j' - q_j p_j'|
  };
  std::vector<Injection> injections;
  auto add_injection = [&](int j, int jn, double size) {
    const double den = std::abs(p[size_t(j)] * q[size_t(jn)] - q[size_t(j)] * p[size_t(jn)]);
    if (den == 0.0) throw ConvergenceError("second solution: degenerate error propagation", INFINITY);
    injections.push_back({j, jn, size, den});
  };

  bool closed = true;
  for (int n = 0; n <= N; ++n) {
    const size_t un = static_cast<size_t>(n);
    if (closed) {
      HypergeometricValue best{{}, INFINITY, {}};
      double achieved = INFINITY;
      for (SecondForm f : {SecondForm::kPfaff, SecondForm::kZeta}) {
        try {
          const HypergeometricValue v = second_closed_form(tau, zeta, n, f);
          if (v.rel_error < best.rel_error) best = v;
        } catch (const ConvergenceError& e) {
          achieved = std::min(achieved, e.achieved());
        }
        if (best.rel_error <= kClosedFormTol) break;
      }
      if (best.rel_error <= kClosedFormTol || (n < 2 && best.rel_error <= kSecondTol)) {
        q[un] = best.value;
        err[un] = best.rel_error * std::abs(best.value);
        continue;
      }
      if (n < 2)
        throw ConvergenceError("second solution: closed form failed at the seed index",
                               std::min(achieved, best.rel_error));
      closed = false;
      add_injection(n - 2, n - 1, err[un - 2]);
      add_injection(n - 1, n - 2, err[un - 1]);
    }
    double rounding = 0.0;
    q[un] = forward_step(tau, zeta, n - 1, q[un - 2], q[un - 1], &rounding);
    add_injection(n, n - 1, rounding);
    double e = 0.0;
    for (const auto& inj : injections) {
      const size_t jn = static_cast<size_t>(inj.neighbour);
      e += inj.size * (std::abs(p[un]) * std::abs(q[jn]) + std::abs(q[un]) * std::abs(p[jn])) /
           inj.denom;
    }
    err[un] = e;
    if (!(e <= kSecondTol * std::abs(q[un])))
      throw ConvergenceError("second solution: forward recurrence lost accuracy at n = " +
                                 std::to_string(n),
                             e / std::abs(q[un]));
  }
  return q;
}

std::vector<Complex> p_sequence(const PhysicalParams& p, double t, int N) {
  PhysicalParams pt = p;
  pt.t = t;
  const DerivedParams d = derive_params(pt);
  const Complex tau = d.tau_of(t);
  std::vector<Complex> w = regular_sequence(tau, d.zeta, N);
  for (int n = 0; n <= N; ++n) {
    const HypergeometricValue cf = regular_closed_form(tau, d.zeta, n);
    const double diff = std::abs(cf.value - w[size_t(n)]);
    if (diff > 1e-9 * std::abs(w[size_t(n)]) + 4.0 * cf.rel_error * std::abs(cf.value))
      throw InternalError("p_n recurrence and closed form disagree at n = " + std::to_string(n));
  }
  return w;
}

std::vector<Complex> q_sequence(const PhysicalParams& p, double t, int N) {
  PhysicalParams pt = p;
  pt.t = t;
  const DerivedParams d = derive_params(pt);
  return second_sequence(d.tau_of(t), d.zeta, N);
}

SolutionPair s_c_sequences(const PhysicalParams& p, double t, int N) {
  PhysicalParams pt = p;
  pt.t = t;
  const DerivedParams d = derive_params(pt);
  const Complex tau = d.tau_of(t);
  SolutionPair pair;
  pair.params = pt;
  pair.t = t;
  pair.regular = regular_sequence(tau, d.zeta, N);
  pair.second = second_sequence(tau, d.zeta, N);
  Complex th{1.0, 0.0};
  for (int n = 0; n <= N; ++n) {
    pair.regular[size_t(n)] *= th;
    th *= d.theta;
    pair.second[size_t(n)] *= th;
  }
  pair.wronskian = Complex(p.b - p.C / (2.0 * p.b), -p.k);
  return pair;
}

Complex wronskian(const SolutionPair& pair, int n) {
  const int N = static_cast<int>(pair.regular.size()) - 1;
  if (n < 1 || n > N || pair.second.size() != pair.regular.size())
    throw DimensionError("wronskian index out of range");
  const DerivedParams d = derive_params(pair.params);
  const TridiagonalOperator h = build_h(pair.params, std::max(N, 1));
  const Complex alpha = h.d(n) / ipow(d.chi, n - 1);
  const size_t un = static_cast<size_t>(n);
  return alpha * (pair.second[un] * pair.regular[un - 1] - pair.second[un - 1] * pair.regular[un]);
}

double recurrence_residual(const TridiagonalOperator& h, const std::vector<Complex>& w) {
  const int last = std::min(h.order(), static_cast<int>(w.size()) - 2);
  double worst = 0.0;
  for (int n = 1; n <= last; ++n) {
    const size_t un = static_cast<size_t>(n);
    const Complex r = h.a(n) * w[un - 1] + h.b(n) * w[un] + h.d(n + 1) * w[un + 1];
    const double scale =
        std::max({std::abs(w[un - 1]), std::abs(w[un]), std::abs(w[un + 1])}) * std::abs(h.b(n));
    worst = std::max(worst, scale == 0.0 ? std::abs(r) : std::abs(r) / scale);
  }
  return worst;
}

Complex reference_solution(const PhysicalParams& p, double xi) {
  const DerivedParams d = derive_params(p);
  const Complex tau = d.tau_of(p.t);
  return std::exp(d.lambda * xi) * kummer_1f1(kI * tau, 1.0, -kI * d.gamma * xi);
}

std::vector<double> sturmian_functions(double b, double x, int N) {
  require_order(N);
  if (!(b > 0.0) || !(x >= 0.0)) throw DomainError("Sturmian functions need b > 0 and x >= 0");
  const double arg = 2.0 * b * x;
  if (b * x > 700.0) throw DomainError("Laguerre evaluation overflows for b*x > 700");
  const double scale = std::sqrt(2.0 * b) * std::exp(-b * x);
  std::vector<double> phi(static_cast<size_t>(N) + 1);
  double lm1 = 0.0, l0 = 1.0;
  for (int n = 0; n <= N; ++n) {
    phi[size_t(n)] = scale * l0;
    const double next = ((2.0 * n + 1.0 - arg) * l0 - n * lm1) / (n + 1.0);
    lm1 = l0;
    l0 = next;
  }
  return phi;
}

Complex expansion_factor(const PhysicalParams& p) {
  const DerivedParams d = derive_params(p);
  const Complex tau = d.tau_of(p.t);
  const Complex bl = p.b - d.lambda;
  return std::sqrt(2.0 * p.b) / bl * principal_power(bl / (bl + kI * d.gamma), kI * tau);
}

namespace {

std::vector<Complex> expansion_coefficients(const PhysicalParams& p, int N) {
  const DerivedParams d = derive_params(p);
  std::vector<Complex> c = regular_sequence(d.tau_of(p.t), d.zeta, N);
  Complex th{1.0, 0.0};
  for (auto& v : c) {
    v *= th;
    th *= d.theta;
  }
  return c;
}

}  // namespace

double expansion_check(const PhysicalParams& p, double t, int N, const std::vector<double>& grid) {
  PhysicalParams pt = p;
  pt.t = t;
  const std::vector<Complex> coef = expansion_coefficients(pt, N);
  const Complex f = expansion_factor(pt);
  double worst = 0.0;
  for (double xi : grid) {
    if (!(xi >= 0.0)) throw DomainError("expansion grid points must be non-negative");
    const std::vector<double> phi = sturmian_functions(p.b, xi, N);
    Complex sum{};
    for (int n = 0; n <= N; ++n) sum += f * coef[size_t(n)] * phi[size_t(n)];
    worst = std::max(worst, std::abs(sum - reference_solution(pt, xi)));
  }
  return worst;
}

double projection_check(const PhysicalParams& p, double t, int N) {
  PhysicalParams pt = p;
  pt.t = t;
  const std::vector<Complex> coef = expansion_coefficients(pt, N);
  const Complex f = expansion_factor(pt);
  // Integrate in x = 2 b xi over [0, 4N + 100] on unit panels.
  const double x_max = 4.0 * N + 100.0;
  const GaussRule& rule = gauss_legendre(24);
  std::vector<Complex> proj(static_cast<size_t>(N) + 1);
  const double jac = 1.0 / (2.0 * p.b);
  for (double a = 0.0; a < x_max; a += 1.0) {
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
      const double x = a + 0.5 * (rule.nodes[i] + 1.0);
      const double xi = x * jac;
      const double w = 0.5 * rule.weights[i] * jac;
      const Complex u = reference_solution(pt, xi);
      const std::vector<double> phi = sturmian_functions(p.b, xi, N);
      for (int n = 0; n <= N; ++n) proj[size_t(n)] += w * phi[size_t(n)] * u;
    }
  }
  double worst = 0.0;
  for (int n = 0; n <= N; ++n) {
    const Complex expect = f * coef[size_t(n)];
    worst = std::max(worst, std::abs(proj[size_t(n)] - expect) / std::max(1.0, std::abs(expect)));
  }
  return worst;
}

}  // namespace coulgreen
