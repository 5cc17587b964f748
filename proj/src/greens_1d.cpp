#include "coulgreen/greens_1d.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "coulgreen/errors.hpp"
#include "coulgreen/recurrence_solutions.hpp"

namespace coulgreen {

std::string to_string(Variant v) { return v == Variant::kXi ? "xi" : "eta"; }

Variant variant_from_string(const std::string& s) {
  if (s == "xi") return Variant::kXi;
  if (s == "eta") return Variant::kEta;
  throw DomainError("unknown variant: " + s);
}

std::string GreensBlock1D::gauge_description() const {
  if (gauge_y == Complex{}) return "y=0";
  std::ostringstream os;
  os.precision(17);
  os << "y=" << gauge_y.real() << (gauge_y.imag() < 0 ? "" : "+") << gauge_y.imag() << "i";
  return os.str();
}

namespace {

void fill_elements(GreensBlock1D& g) {
  const int N = g.order;
  g.elements.assign(size_t(N) * size_t(N), Complex{});
  std::vector<Complex> theta_pow(size_t(2 * N) + 1);
  theta_pow[0] = g.theta;  // theta^{0+0+1}
  for (size_t i = 1; i < theta_pow.size(); ++i) theta_pow[i] = theta_pow[i - 1] * g.theta;
  Complex chi_inv_pow{1.0, 0.0};
  for (int m = 0; m < N; ++m) {
    for (int n = 0; n < N; ++n) {
      const size_t nu = size_t(std::min(n, m)), mu = size_t(std::max(n, m));
      const Complex second = g.second[mu] + g.gauge_y * g.regular[mu];
      g.elements[size_t(n) * size_t(N) + size_t(m)] =
          g.lead * theta_pow[size_t(n + m)] * chi_inv_pow * g.regular[nu] * second;
    }
    chi_inv_pow /= g.chi;
  }
}

void require_block_order(int N) {
  if (N < 1 || N > 4096) throw DimensionError("block order must be in [1, 4096]");
}

}  // namespace

GreensBlock1D g_xi_block_at_tau(const PhysicalParams& p, Complex tau, int N) {
  require_block_order(N);
  const DerivedParams d = derive_params(p);
  GreensBlock1D g;
  g.params = p;
  g.variant = Variant::kXi;
  g.order = N;
  g.lead = kI / (2.0 * p.k) * (d.chi - 1.0) / d.chi;
  g.theta = d.theta;
  g.chi = d.chi;
  g.regular = regular_sequence(tau, d.zeta, N - 1);
  g.second = second_sequence(tau, d.zeta, N - 1);
  g.formula = p.C == 0.0 ? "xi:(i/2k)((zeta-1)/zeta)zeta^-m p_nu q_mu"
                         : "xi:(i/2k)((chi-1)/chi)theta^(n+m+1)chi^-m p_nu(tau) q_mu(tau)";
  fill_elements(g);
  return g;
}

GreensBlock1D g_xi_block(const PhysicalParams& p, double t, int N) {
  PhysicalParams pt = p;
  pt.t = t;
  return g_xi_block_at_tau(pt, derive_params(pt).tau_of(t), N);
}

GreensBlock1D g_eta_block(const PhysicalParams& p, double t, int N, EtaPath path) {
  PhysicalParams pt = p;
  pt.t = t;
  pt.validate();
  if (path == EtaPath::kAuto) path = p.C == 0.0 ? EtaPath::kConjugate : EtaPath::kSubstitution;
  GreensBlock1D g;
  if (path == EtaPath::kConjugate) {
    if (p.C != 0.0) throw DomainError("conjugation path for the eta block requires C = 0");
    g = g_xi_block(pt, t, N);
    auto conj_all = [](std::vector<Complex>& v) {
      for (auto& z : v) z = std::conj(z);
    };
    conj_all(g.elements);
    conj_all(g.regular);
    conj_all(g.second);
    g.lead = std::conj(g.lead);
    g.theta = std::conj(g.theta);
    g.chi = std::conj(g.chi);
    g.formula = "eta:conj(xi)";
  } else {
    const PhysicalParams mirror = pt.eta_mirror();
    g = g_xi_block(mirror, mirror.t, N);
    g.formula = "eta:xi(t->-t,k->-k)";
  }
  g.params = pt;
  g.variant = Variant::kEta;
  return g;
}

GreensBlock1D gauge_shift(const GreensBlock1D& block, Complex y) {
  GreensBlock1D g = block;
  g.gauge_y = block.gauge_y + y;
  fill_elements(g);
  return g;
}

TridiagonalOperator operator_for(const GreensBlock1D& block) {
  const PhysicalParams p = block.variant == Variant::kXi ? block.params : block.params.eta_mirror();
  return build_h(p, block.order);
}

double inverse_residual(const GreensBlock1D& block, const TridiagonalOperator& h) {
  const int N = block.order;
  if (N < 3) throw DimensionError("inverse residual needs block order >= 3");
  if (h.order() < N - 1) throw DimensionError("operator order too small for the block");
  double worst = 0.0;
  for (int n = 0; n <= N - 2; ++n)
    for (int m = 0; m < N; ++m) {
      Complex r = h.b(n) * block.at(n, m) + h.d(n + 1) * block.at(n + 1, m);
      if (n > 0) r += h.a(n) * block.at(n - 1, m);
      if (n == m) r -= 1.0;
      worst = std::max(worst, std::abs(r));
    }
  return worst;
}

}  // namespace coulgreen
