#include <cmath>
#include <cstdlib>
#include <vector>

#include "coulgreen/errors.hpp"
#include "coulgreen/greens_2d.hpp"
#include "oracles/oracle_values.hpp"
#include "test_support.hpp"

using namespace coulgreen;

namespace {

const PhysicalParams kBase{1.0, 1.0, 0.7, 0.0};
const PhysicalParams kLinear{1.0, 2.0, 0.5, 1.0};

double max_diff(const GreensBlock2D& a, const GreensBlock2D& b) {
  double worst = 0.0;
  for (size_t i = 0; i < a.elements.size(); ++i) worst = std::max(worst, std::abs(a.elements[i] - b.elements[i]));
  return worst;
}

}  // namespace

TEST_CASE("Kronecker probe: a constant eta factor reproduces the Gram identity") {
  const QuadratureConfig cfg;
  const int N = 3;
  const GreensBlock2D g = convolve_with_eta(
      kBase, 0.7, N, cfg, [](double, std::span<Complex> out) { std::fill(out.begin(), out.end(), Complex(1.0, 0.0)); });
  for (int n1 = 0; n1 < N; ++n1)
    for (int n2 = 0; n2 < N; ++n2)
      for (int m1 = 0; m1 < N; ++m1)
        for (int m2 = 0; m2 < N; ++m2) CHECK(std::abs(g.at(n1, n2, m1, m2) - (n1 == m1 ? 1.0 : 0.0)) < 1e-6);
}

TEST_CASE("element values against the oracle") {
  const QuadratureConfig cfg;
  const GreensBlock2D g0 = convolve(kBase, 0.7, 2, cfg);
  CHECK_CLOSE(g0.at(0, 0, 0, 0), oracle::kG2d_0000_C0, 1e-9);
  const GreensBlock2D g1 = convolve(kLinear, 0.5, 2, cfg);
  CHECK_CLOSE(g1.at(0, 0, 0, 0), oracle::kG2d_0000_C1, 1e-9);
}

TEST_CASE("2D inverse identity and the ablation control") {
  const QuadratureConfig cfg;
  const GreensBlock2D g0 = convolve(kBase, 0.7, 5, cfg);
  const double r0 = residual_identity_2d(g0, kBase);
  CHECK(r0 < 1e-5);
  // error budget: within 10x of what the quadrature itself reports
  CHECK(r0 <= 10.0 * std::max(g0.error_estimate, 1e-13) * 100.0);
  const GreensBlock2D g1 = convolve(kLinear, 0.5, 4, cfg);
  CHECK(residual_identity_2d(g1, kLinear) < 1e-4);

  Convolution2DOptions ablate;
  ablate.ablate_pole_term = true;
  const GreensBlock2D bad = convolve(kBase, 0.7, 5, cfg, ablate);
  CHECK(bad.pole_term_ablated);
  CHECK(residual_identity_2d(bad, kBase) >= 1e-2);
}

TEST_CASE("C -> 0 continuity of the general path") {
  const QuadratureConfig cfg;
  const GreensBlock2D c0 = convolve_c0(kBase, 0.7, 3, cfg);
  const GreensBlock2D cg = convolve_general({1.0, 1.0, 0.7, 1e-6}, 0.7, 3, cfg);
  CHECK(max_diff(c0, cg) < 1e-4);
}

TEST_CASE("B_m bookkeeping") {
  CHECK(b_m_bookkeeping_residual(kLinear, 6) < 1e-12);
  CHECK(b_m_bookkeeping_residual({0.7, 1.5, 0.0, -0.4}, 6) < 1e-12);
  // C = 0: theta = 1, chi = zeta, so B_m = 1
  CHECK_CLOSE(b_m_factor(kBase, 3), 1.0, 1e-14);
}

TEST_CASE("separation conditions") {
  const SeparationReport r = verify_separation_conditions(kBase, 4, QuadratureConfig{});
  CHECK(r.first_u_deviation < 1e-5);
  CHECK(r.first_offdiag < 1e-5);
  CHECK(r.alt_sum_deviation < 1e-2);
  CHECK_THROWS_AS(verify_separation_conditions(kLinear, 4, QuadratureConfig{}), DomainError);
}

TEST_CASE("alternative parameter set and xi-side gauge") {
  const QuadratureConfig cfg;
  Convolution2DOptions alt;
  alt.parameter_set = ParameterSet::kAlternative;
  const GreensBlock2D a = convolve(kBase, 0.7, 4, cfg, alt);
  CHECK(a.parameter_set == ParameterSet::kAlternative);
  // the extra term is an algebraic-tail integral, so it carries that error
  const double ra = residual_identity_2d(a, kBase);
  INFO("alternative residual " << ra << " estimate " << a.error_estimate);
  CHECK(ra < 1e-3);
  // a constant xi-side gauge: inert with A_xi = 0, divergent otherwise
  Convolution2DOptions first;
  first.xi_gauge_y = 3.7;
  const GreensBlock2D fg = convolve(kBase, 0.7, 4, cfg, first);
  CHECK(max_diff(fg, convolve(kBase, 0.7, 4, cfg)) == 0.0);
  CHECK(fg.xi_gauge_y == Complex(3.7, 0.0));
  alt.xi_gauge_y = 3.7;
  CHECK_THROWS_AS(convolve(kBase, 0.7, 4, cfg, alt), DomainError);
  alt.xi_gauge_y = 0.0;
  CHECK_THROWS_AS(convolve(kLinear, 0.5, 3, cfg, alt), DomainError);
}

TEST_CASE("exchange symmetry probe") {
  // Swapping (n1, m1) <-> (n2, m2) exchanges the roles of the two factors, so
  // the swapped block inverts the operator of the mirrored parameters.
  const QuadratureConfig cfg;
  const int N = 4;
  const GreensBlock2D g = convolve(kBase, 0.7, N, cfg);
  GreensBlock2D swapped = g;
  for (int n1 = 0; n1 < N; ++n1)
    for (int n2 = 0; n2 < N; ++n2)
      for (int m1 = 0; m1 < N; ++m1)
        for (int m2 = 0; m2 < N; ++m2) swapped.elements[g.index(n1, n2, m1, m2)] = g.at(n2, n1, m2, m1);
  const PhysicalParams mirror = kBase.eta_mirror();
  swapped.params = mirror;
  CHECK(residual_identity_2d(swapped, mirror) < 1e-5);
}

TEST_CASE("results do not depend on the thread count") {
  const QuadratureConfig cfg;
  ::setenv("COULGREEN_THREADS", "1", 1);
  const GreensBlock2D one = convolve(kLinear, 0.5, 3, cfg);
  ::setenv("COULGREEN_THREADS", "5", 1);
  const GreensBlock2D five = convolve(kLinear, 0.5, 3, cfg);
  ::unsetenv("COULGREEN_THREADS");
  CHECK(one.elements == five.elements);
  CHECK(one.error_estimate == five.error_estimate);
  CHECK(one.evaluations == five.evaluations);
}

TEST_CASE("argument checks") {
  const QuadratureConfig cfg;
  CHECK_THROWS_AS(convolve(kBase, 0.7, 0, cfg), DomainError);
  CHECK_THROWS_AS(convolve(kBase, 0.7, 13, cfg), DomainError);
  CHECK_THROWS_AS(convolve_general(kBase, 0.7, 3, cfg), DomainError);
  CHECK_THROWS_AS(convolve_c0(kLinear, 0.5, 3, cfg), DomainError);
  const GreensBlock2D g = convolve(kBase, 0.7, 2, cfg);
  CHECK_THROWS_AS(residual_identity_2d(g, kBase), DimensionError);
}
