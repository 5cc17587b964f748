#include <cmath>
#include <numbers>
#include <vector>

#include "coulgreen/errors.hpp"
#include "coulgreen/operator_matrices.hpp"
#include "oracles/oracle_values.hpp"
#include "test_support.hpp"

using namespace coulgreen;

namespace {

struct LaguerreRule {
  std::vector<double> x, w;
};

// n-point Gauss-Laguerre rule (weight e^{-x}) by Newton iteration on L_n with
// the usual asymptotic starting guesses.
LaguerreRule gauss_laguerre(int n) {
  LaguerreRule r;
  double z = 0.0;
  for (int i = 0; i < n; ++i) {
    if (i == 0)
      z = 3.0 / (1.0 + 2.4 * n);
    else if (i == 1)
      z += 15.0 / (1.0 + 2.5 * n);
    else {
      const double ai = i - 1;
      z += (1.0 + 2.55 * ai) / (1.9 * ai) * (z - r.x[size_t(i) - 2]);
    }
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2 * j - 1 - z) * p2 - (j - 1) * p3) / j;
      }
      dp = n * (p1 - p2) / z;
      const double z1 = z;
      z = z1 - p1 / dp;
      if (std::abs(z - z1) <= 1e-15 * z) break;
    }
    double pn1 = 1.0, pn2 = 0.0;  // L_{n-1}(z) for the weight
    for (int j = 1; j < n; ++j) {
      const double p3 = pn2;
      pn2 = pn1;
      pn1 = ((2 * j - 1 - z) * pn2 - (j - 1) * p3) / j;
    }
    r.x.push_back(z);
    r.w.push_back(z / (double(n) * n * pn1 * pn1));
  }
  return r;
}

}  // namespace

TEST_CASE("derived parameters at C = 0 degenerate exactly") {
  const DerivedParams d = derive_params({1.0, 1.0, 0.3, 0.0});
  CHECK(d.lambda == Complex(0.0, 0.0));
  CHECK(d.gamma == Complex(1.0, 0.0));
  CHECK(d.theta == Complex(1.0, 0.0));
  CHECK_CLOSE(d.zeta, -kI, 1e-16);
  CHECK(d.chi == d.zeta);
  for (double t : {-2.0, 0.0, 0.7, 5.5}) CHECK(d.tau_of(t) == Complex(t, 0.0));
  // |zeta| = 1, arg in (-pi, 0) for b, k > 0
  const DerivedParams e = derive_params({0.5, 3.0, 0.0, 0.0});
  CHECK(std::abs(std::abs(e.zeta) - 1.0) < 1e-15);
  CHECK(std::arg(e.zeta) < 0.0);
  CHECK(std::arg(e.zeta) > -std::numbers::pi);
}

TEST_CASE("derived parameters at b = 1, k = 2, C = 1") {
  const DerivedParams d = derive_params({1.0, 2.0, 0.5, 1.0});
  CHECK_CLOSE(d.zeta, oracle::kC1_zeta, 1e-15);
  CHECK_CLOSE(d.lambda, oracle::kC1_lambda, 1e-15);
  CHECK_CLOSE(d.gamma, oracle::kC1_gamma, 1e-15);
  CHECK_CLOSE(d.theta, oracle::kC1_theta, 1e-15);
  CHECK_CLOSE(d.chi, oracle::kC1_chi, 1e-15);
  CHECK_CLOSE(d.tau_of(0.5), oracle::kC1_tau_t0p5, 1e-15);
  CHECK_CLOSE(d.t_of_tau(d.tau_of(0.5)), 0.5, 1e-15);
  // theta (b - lambda) = b + lambda
  CHECK_CLOSE(d.theta * (1.0 - d.lambda), 1.0 + d.lambda, 1e-15);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(derive_params({1.0, 1.0, 0.0, 1.0}), DomainError);  // 1 - 2C/k^2 = -1
  CHECK_THROWS_AS(derive_params({1.0, 1.0, 0.0, 0.5}), DomainError);  // = 0
  CHECK_THROWS_AS(derive_params({0.0, 1.0, 0.0, 0.0}), DomainError);
  CHECK_THROWS_AS(derive_params({1.0, 0.0, 0.0, 0.0}), DomainError);
  CHECK_THROWS_AS(derive_params({1.0, 1.0, NAN, 0.0}), DomainError);
  CHECK_NOTHROW(derive_params({1.0, 1.0, 0.0, -4.0}));
}

TEST_CASE("build_h elements") {
  const TridiagonalOperator h = build_h({1.0, 1.0, 0.0, 0.0}, 5);
  CHECK(h.order() == 5);
  CHECK(h.b(0) == Complex(1.0, 1.0));
  CHECK(h.a(3) == Complex(3.0, -3.0));
  CHECK(h.d(3) == Complex(3.0, 3.0));
  const TridiagonalOperator hc = build_h({1.0, 2.0, 0.5, 1.0}, 5);
  CHECK_CLOSE(hc.a(2), oracle::kC1_a2, 1e-15);
  CHECK_CLOSE(hc.b(2), oracle::kC1_b2, 1e-15);
  CHECK_CLOSE(hc.d(2), oracle::kC1_d2, 1e-15);
  CHECK(hc.element(2, 1) == hc.a(2));
  CHECK(hc.element(1, 2) == hc.d(2));
  CHECK(hc.element(0, 3) == Complex(0.0, 0.0));
  CHECK_THROWS_AS(build_h({1.0, 1.0, 0.0, 0.0}, 0), DimensionError);
}

TEST_CASE("coordinate matrix Q") {
  const TridiagonalOperator q = build_q_matrix(1.0, 25);
  CHECK(q.b(0) == Complex(0.5, 0.0));
  CHECK(q.element(2, 1) == Complex(-1.0, 0.0));
  CHECK(q.element(2, 2) == Complex(2.5, 0.0));
  CHECK(q.element(2, 3) == Complex(-1.5, 0.0));
  for (int n = 0; n <= 20; ++n) CHECK(q.element(n, n + 1) == q.element(n + 1, n));
  CHECK(q.symmetric());
}

TEST_CASE("Q equals the Gauss-Laguerre matrix of the coordinate") {
  // <phi_n | xi | phi_m> with phi_n = sqrt(2b) e^{-b xi} L_n(2 b xi); x = 2 b xi
  const double b = 0.8;
  const TridiagonalOperator q = build_q_matrix(b, 12);
  const LaguerreRule rule = gauss_laguerre(20);
  double worst = 0.0;
  for (int n = 0; n <= 10; ++n)
    for (int m = 0; m <= 10; ++m) {
      double s = 0.0;
      for (size_t i = 0; i < rule.x.size(); ++i)
        s += rule.w[i] * std::laguerre(unsigned(n), rule.x[i]) * std::laguerre(unsigned(m), rule.x[i]) *
             rule.x[i] / (2.0 * b);
      worst = std::max(worst, std::abs(s - q.element(n, m).real()));
    }
  INFO("worst " << worst);
  CHECK(worst < 1e-10);
}

TEST_CASE("symmetrize") {
  const PhysicalParams p0{1.0, 1.0, 0.0, 0.0};
  const TridiagonalOperator t0 = symmetrize(build_h(p0, 5), derive_params(p0));
  CHECK(t0.b(0) == build_h(p0, 5).b(0));
  CHECK_CLOSE(t0.b(1), Complex(-1.0, 3.0), 1e-15);
  CHECK(t0.symmetric(1e-14));

  const PhysicalParams pc{1.0, 2.0, 0.5, 1.0};
  const DerivedParams d = derive_params(pc);
  const TridiagonalOperator h = build_h(pc, 50);
  const TridiagonalOperator t = symmetrize(h, d);
  CHECK(t.symmetric(1e-12));
  // a_n / chi^n = d_n / chi^{n-1}
  for (int n = 1; n <= 50; ++n)
    CHECK_CLOSE(h.a(n) / ipow(d.chi, n), h.d(n) / ipow(d.chi, n - 1), 1e-12);
}

TEST_CASE("C -> 0 continuity of the operator") {
  const TridiagonalOperator h0 = build_h({1.0, 1.0, 0.7, 0.0}, 30);
  const TridiagonalOperator h1 = build_h({1.0, 1.0, 0.7, 1e-10}, 30);
  for (int n = 0; n <= 30; ++n) {
    CHECK(testing::rel_diff(h1.b(n), h0.b(n)) < 1e-8);
    if (n > 0) {
      CHECK(testing::rel_diff(h1.a(n), h0.a(n)) < 1e-8);
      CHECK(testing::rel_diff(h1.d(n), h0.d(n)) < 1e-8);
    }
  }
}

TEST_CASE("eta mirror keeps kt") {
  const PhysicalParams p{1.3, 0.9, 0.4, 0.1};
  const PhysicalParams m = p.eta_mirror();
  CHECK(m.k * m.t == p.k * p.t);
  CHECK(m.eta_mirror().k == p.k);
}
