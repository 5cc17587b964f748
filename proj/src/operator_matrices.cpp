#include "coulgreen/operator_matrices.hpp"

#include <cmath>
#include <string>

#include "coulgreen/errors.hpp"

namespace coulgreen {

void PhysicalParams::validate() const {
  if (!std::isfinite(b) || !std::isfinite(k) || !std::isfinite(t) || !std::isfinite(C))
    throw DomainError("parameters must be finite");
  if (!(b > 0.0)) throw DomainError("basis scale b must be positive");
  if (k == 0.0) throw DomainError("momentum k must be non-zero");
  if (!(1.0 - 2.0 * C / (k * k) > 0.0))
    throw DomainError("1 - 2C/k^2 must be positive (complex square-root regime is not supported)");
}

Complex DerivedParams::tau_of(Complex t) const {
  return (2.0 * t + kI * (1.0 - root)) / (2.0 * root);
}

Complex DerivedParams::t_of_tau(Complex tau) const {
  return root * tau - kI * (1.0 - root) / 2.0;
}

DerivedParams derive_params(const PhysicalParams& p) {
  p.validate();
  DerivedParams d;
  const double b = p.b, k = p.k, C = p.C;
  d.root = C == 0.0 ? 1.0 : std::sqrt(1.0 - 2.0 * C / (k * k));
  d.lambda = kI * k * (d.root - 1.0) / 2.0;
  d.gamma = k * d.root;
  d.theta = (b + d.lambda) / (b - d.lambda);
  const double shifted = b + C / (2.0 * b);
  d.zeta = Complex(shifted, -k * d.root) / Complex(shifted, k * d.root);
  const double reduced = b - C / (2.0 * b);
  d.chi = Complex(reduced, -k) / Complex(reduced, k);
  if (d.chi == Complex{} || !std::isfinite(std::abs(d.chi)))
    throw DomainError("degenerate scaling base chi");
  return d;
}

TridiagonalOperator::TridiagonalOperator(std::vector<Complex> sub, std::vector<Complex> diag,
                                         std::vector<Complex> super)
    : sub_(std::move(sub)), diag_(std::move(diag)), super_(std::move(super)) {
  if (diag_.empty() || sub_.size() + 1 != diag_.size() || super_.size() + 1 != diag_.size())
    throw DimensionError("tridiagonal operator: inconsistent diagonal lengths");
}

Complex TridiagonalOperator::a(int n) const {
  if (n < 1 || n > order()) throw DimensionError("a_n index out of range: " + std::to_string(n));
  return sub_[static_cast<size_t>(n - 1)];
}

Complex TridiagonalOperator::b(int n) const {
  if (n < 0 || n > order()) throw DimensionError("b_n index out of range: " + std::to_string(n));
  return diag_[static_cast<size_t>(n)];
}

Complex TridiagonalOperator::d(int n) const {
  if (n < 1 || n > order()) throw DimensionError("d_n index out of range: " + std::to_string(n));
  return super_[static_cast<size_t>(n - 1)];
}

Complex TridiagonalOperator::element(int row, int col) const {
  if (row < 0 || col < 0 || row > order() || col > order())
    throw DimensionError("tridiagonal element out of range");
  if (row == col) return b(row);
  if (col == row - 1) return a(row);
  if (col == row + 1) return d(col);
  return {};
}

bool TridiagonalOperator::symmetric(double tol) const {
  for (size_t i = 0; i < sub_.size(); ++i)
    if (std::abs(sub_[i] - super_[i]) > tol * std::max(1.0, std::abs(sub_[i]))) return false;
  return true;
}

TridiagonalOperator build_h(const PhysicalParams& p, int N) {
  p.validate();
  if (N < 1) throw DimensionError("operator order must be at least 1");
  const double half_c = p.C / (2.0 * p.b);
  const double shifted = p.b + half_c;  // b + C/2b, equal to b at C = 0
  const double reduced = p.b - half_c;
  const Complex lower(reduced, -p.k), upper(reduced, p.k);
  std::vector<Complex> sub, diag, super;
  for (int n = 0; n <= N; ++n) {
    diag.push_back(Complex(shifted, p.k) + 2.0 * shifted * n + 2.0 * p.k * p.t);
    if (n >= 1) {
      sub.push_back(lower * static_cast<double>(n));
      super.push_back(upper * static_cast<double>(n));
    }
  }
  return {std::move(sub), std::move(diag), std::move(super)};
}

TridiagonalOperator build_q_matrix(double b, int N) {
  if (!(b > 0.0) || !std::isfinite(b)) throw DomainError("basis scale b must be positive");
  if (N < 1) throw DimensionError("operator order must be at least 1");
  std::vector<Complex> sub, diag, super;
  for (int n = 0; n <= N; ++n) {
    diag.emplace_back((2.0 * n + 1.0) / (2.0 * b));
    if (n >= 1) {
      sub.emplace_back(-n / (2.0 * b));
      super.emplace_back(-n / (2.0 * b));
    }
  }
  return {std::move(sub), std::move(diag), std::move(super)};
}

Complex ipow(Complex base, int n) {
  if (n < 0) return 1.0 / ipow(base, -n);
  Complex r{1.0, 0.0};
  for (int i = 0; i < n; ++i) r *= base;
  return r;
}

TridiagonalOperator symmetrize(const TridiagonalOperator& h, const DerivedParams& d) {
  const Complex s = d.chi;
  if (s == Complex{}) throw DomainError("symmetrize: zero scaling base");
  std::vector<Complex> sub, diag, super;
  Complex inv_pow{1.0, 0.0};  // s^{-n}
  for (int n = 0; n <= h.order(); ++n) {
    if (n >= 1) {
      const Complex alpha = h.d(n) * inv_pow;  // d_n / s^{n-1}
      sub.push_back(alpha);
      super.push_back(alpha);
    }
    if (n >= 1) inv_pow /= s;
    diag.push_back(h.b(n) * inv_pow);
  }
  return {std::move(sub), std::move(diag), std::move(super)};
}

}  // namespace coulgreen
