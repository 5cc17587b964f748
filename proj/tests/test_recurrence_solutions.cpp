#include <cmath>
#include <vector>

#include "coulgreen/errors.hpp"
#include "coulgreen/operator_matrices.hpp"
#include "coulgreen/recurrence_solutions.hpp"
#include "oracles/oracle_values.hpp"
#include "test_support.hpp"

using namespace coulgreen;

namespace {

const PhysicalParams kBase{1.0, 1.0, 0.7, 0.0};
const PhysicalParams kLinear{1.0, 2.0, 0.5, 1.0};

}  // namespace

TEST_CASE("regular solution values") {
  const std::vector<Complex> p = p_sequence(kBase, 0.7, 20);
  CHECK(p[0] == Complex(1.0, 0.0));
  CHECK_CLOSE(p[5], oracle::kP5_t0p7, 1e-13);
  CHECK_CLOSE(p[20], oracle::kP20_t0p7, 1e-13);
  const std::vector<Complex> p0 = p_sequence({1.0, 1.0, 0.0, 0.0}, 0.0, 10);
  CHECK_CLOSE(p0[1], -1.0, 1e-15);
  // p_n(0) = (-1)^n: the pole term of the orthonormality relation
  for (int n = 0; n <= 10; ++n) CHECK_CLOSE(p0[size_t(n)], (n % 2 ? -1.0 : 1.0), 1e-14);
}

TEST_CASE("recurrence and closed form of p_n agree") {
  for (const PhysicalParams& p : {kBase, kLinear, PhysicalParams{0.5, 3.0, -1.0, -0.3 * 9.0}}) {
    const DerivedParams d = derive_params(p);
    const Complex tau = d.tau_of(p.t);
    const std::vector<Complex> w = regular_sequence(tau, d.zeta, 50);
    for (int n = 0; n <= 50; ++n) CHECK(testing::rel_diff(regular_closed_form(tau, d.zeta, n).value, w[size_t(n)]) < 1e-9);
  }
}

TEST_CASE("second solution values") {
  const std::vector<Complex> q = q_sequence(kBase, 0.7, 60);
  CHECK_CLOSE(q[0], oracle::kQ0_t0p7, 1e-13);
  CHECK_CLOSE(q[1], oracle::kQ1_t0p7, 1e-13);
  CHECK_CLOSE(q[2], oracle::kQ2_t0p7, 1e-13);
  CHECK(testing::rel_diff(q[30], oracle::kQ30_t0p7) < 1e-11);
  CHECK(testing::rel_diff(q[60], oracle::kQ60_t0p7) < 1e-10);
  // b_0 q_0 + d_1 q_1 = b - ik
  const TridiagonalOperator h = build_h(kBase, 2);
  CHECK(std::abs(h.b(0) * q[0] + h.d(1) * q[1] - Complex(1.0, -1.0)) < 1e-10);
}

TEST_CASE("closed forms of q_n agree with each other") {
  const Complex zeta = -kI;
  const Complex z2 = second_closed_form(0.7, zeta, 2, SecondForm::kZeta).value;
  const Complex w2 = second_closed_form(0.7, zeta, 2, SecondForm::kPfaff).value;
  CHECK_CLOSE(z2, w2, 1e-10);
  // connection through 1/zeta, n = 1
  for (double t : {0.5, 0.7}) {
    const Complex inv = second_closed_form(t, zeta, 1, SecondForm::kInverse).value;
    const Complex pf = second_closed_form(t, zeta, 1, SecondForm::kPfaff).value;
    CHECK(std::abs(inv - pf) < 1e-10);
  }
  CHECK_CLOSE(second_closed_form(0.5, zeta, 1, SecondForm::kInverse).value, oracle::kQ1_t0p5, 1e-12);
}

TEST_CASE("C = 0 reduces s, c to p, q exactly") {
  const SolutionPair sc = s_c_sequences(kBase, 0.7, 20);
  const std::vector<Complex> p = p_sequence(kBase, 0.7, 20);
  const std::vector<Complex> q = q_sequence(kBase, 0.7, 20);
  for (int n = 0; n <= 20; ++n) {
    CHECK(sc.regular[size_t(n)] == p[size_t(n)]);
    CHECK(sc.second[size_t(n)] == q[size_t(n)]);
  }
}

TEST_CASE("recurrence residuals of both families") {
  for (const PhysicalParams& p : {kBase, kLinear, PhysicalParams{2.0, 0.5, -1.0, 0.075}}) {
    const SolutionPair sc = s_c_sequences(p, p.t, 101);
    const TridiagonalOperator h = build_h(p, 101);
    INFO("b " << p.b << " k " << p.k << " t " << p.t << " C " << p.C);
    CHECK(recurrence_residual(h, sc.regular) < 1e-10);
    CHECK(recurrence_residual(h, sc.second) < 1e-10);
    // gauge family q + y p
    std::vector<Complex> shifted = sc.second;
    for (size_t n = 0; n < shifted.size(); ++n) shifted[n] += 3.7 * sc.regular[n];
    CHECK(recurrence_residual(h, shifted) < 1e-10);
  }
}

TEST_CASE("initial condition of c_n at C != 0") {
  const SolutionPair sc = s_c_sequences(kLinear, 0.5, 3);
  const TridiagonalOperator h = build_h(kLinear, 3);
  CHECK_CLOSE(h.b(0) * sc.second[0] + h.d(1) * sc.second[1], Complex(0.5, -2.0), 1e-12);
}

TEST_CASE("Wronskian") {
  const SolutionPair sc = s_c_sequences(kBase, 0.7, 100);
  CHECK(sc.wronskian == Complex(1.0, -1.0));
  const Complex zeta = -kI;
  CHECK_CLOSE(sc.wronskian, -2.0 * kI * zeta / (zeta - 1.0), 1e-15);
  for (int n = 1; n <= 100; ++n) CHECK(std::abs(wronskian(sc, n) - Complex(1.0, -1.0)) < 1e-9 * std::sqrt(2.0));

  const SolutionPair sl = s_c_sequences(kLinear, 0.5, 100);
  CHECK(sl.wronskian == Complex(0.5, -2.0));
  const Complex w1 = wronskian(sl, 1);
  for (int n = 1; n <= 100; ++n) CHECK(std::abs(wronskian(sl, n) - w1) < 1e-9 * std::abs(w1));
}

TEST_CASE("p_n is a polynomial of degree n in t") {
  const Complex zeta = -kI;
  for (int n : {3, 6}) {
    std::vector<double> nodes;
    for (int j = 0; j <= n; ++j) nodes.push_back(-1.0 + 2.0 * j / n);
    const double held_out = 0.37;
    Complex interp = 0.0;
    for (int j = 0; j <= n; ++j) {
      double basis = 1.0;
      for (int l = 0; l <= n; ++l)
        if (l != j) basis *= (held_out - nodes[size_t(l)]) / (nodes[size_t(j)] - nodes[size_t(l)]);
      interp += basis * regular_sequence(nodes[size_t(j)], zeta, n)[size_t(n)];
    }
    CHECK_CLOSE(interp, regular_sequence(held_out, zeta, n)[size_t(n)], 1e-8);
  }
}

TEST_CASE("pole rejection") {
  CHECK_THROWS_AS(regular_sequence(Complex(0.0, -1.0), -kI, 5), PoleError);  // i tau = 1
  CHECK_THROWS_AS(regular_sequence(Complex(0.0, -2.0 + 1e-8), -kI, 5), PoleError);
  CHECK_NOTHROW(regular_sequence(Complex(0.0, -1.5), -kI, 5));
}

TEST_CASE("expansion coefficients are the projections of the reference solution") {
  const Complex f0 = expansion_factor(kBase);
  const std::vector<Complex> p = p_sequence(kBase, 0.7, 3);
  CHECK_CLOSE(f0 * p[0], oracle::kProjection0_C0, 1e-12);
  CHECK_CLOSE(f0 * p[3], oracle::kProjection3_C0, 1e-12);
  const SolutionPair sl = s_c_sequences(kLinear, 0.5, 2);
  CHECK_CLOSE(expansion_factor(kLinear) * sl.regular[2], oracle::kProjection2_C1, 1e-12);

  CHECK(projection_check(kBase, 0.7, 20) < 1e-10);
  CHECK(projection_check({1.0, 1.0, 0.0, 0.0}, 0.0, 10) < 1e-10);
  CHECK(projection_check(kLinear, 0.5, 20) < 1e-10);
}

TEST_CASE("reference solution and Sturmian functions") {
  // t = 0, C = 0: 1F1(0, 1; z) = 1
  for (double xi : {0.0, 1.0, 7.5}) CHECK_CLOSE(reference_solution({1.0, 1.0, 0.0, 0.0}, xi), 1.0, 1e-15);
  const std::vector<double> phi = sturmian_functions(1.5, 0.4, 3);
  CHECK(phi[0] == doctest::Approx(std::sqrt(3.0) * std::exp(-0.6)).epsilon(1e-15));
  CHECK(phi[2] == doctest::Approx(std::sqrt(3.0) * std::exp(-0.6) * std::laguerre(2u, 1.2)).epsilon(1e-14));
  CHECK_THROWS_AS(sturmian_functions(1.0, 800.0, 3), DomainError);
}
