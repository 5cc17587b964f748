#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "coulgreen/special_functions.hpp"

namespace coulgreen {

/// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussRule gauss_legendre(int n);

/// How the algebraically decaying tails of the t-integrals of Green's elements are
/// handled: Richardson/Neville extrapolation in 1/T over the cutoffs T/4, T/2,
/// T, or the average of the partial integrals over the last half of [0, T].
enum class TailStrategy { kRichardson, kPartialSumAveraging };

std::string to_string(TailStrategy s);
TailStrategy tail_strategy_from_string(const std::string& s);

struct QuadratureConfig {
  /// Symmetric exclusion half-widths around the pole, strictly decreasing.
  std::vector<double> pv_epsilon_schedule{1e-3, 5e-4, 2.5e-4, 1.25e-4};
  /// Largest |t| visited. Exponentially decaying integrands stop earlier once
  /// three consecutive unit panels contribute below 1e-16 of the total.
  double tail_cutoff = 200.0;
  /// Gauss-Legendre nodes per panel.
  int panel_nodes = 20;
  /// Accuracy the caller asks for; results carry their own estimate.
  double target_tol = 1e-10;
  TailStrategy oscillatory_strategy = TailStrategy::kRichardson;

  void validate() const;
};

struct ExtrapolationResult {
  Complex value;
  double error = 0.0;
};

/// Polynomial (Neville) extrapolation of y(x) to x = 0. The error estimate is
/// the change against the extrapolant built from one point fewer.
ExtrapolationResult neville_to_zero(const std::vector<double>& x, const std::vector<Complex>& y);

/// Fills `out` with the integrand components at t. Must be thread safe.
using VectorIntegrand = std::function<void(double t, std::span<Complex> out)>;

struct IntegralResult {
  std::vector<Complex> values;
  double error_estimate = 0.0;  // absolute, max over components
  double cutoff = 0.0;          // largest |t| used
  long evaluations = 0;
};

/// Principal value over the real line of an integrand with (at most) a simple
/// pole at t = 0 and exponential decay. The integrand is folded,
/// f(t) + f(-t), integrated on [eps, T] for every eps in the schedule and
/// extrapolated to eps = 0.
IntegralResult pv_integrate(const VectorIntegrand& f, std::size_t dim, const QuadratureConfig& cfg);

/// Symmetric integral over [-T, T] of a smooth integrand whose tail decays
/// algebraically, extrapolated to T -> infinity with cfg.oscillatory_strategy
/// and T = cfg.tail_cutoff.
IntegralResult tail_integrate(const VectorIntegrand& f, std::size_t dim, const QuadratureConfig& cfg);

/// Worker count from COULGREEN_THREADS (default: hardware concurrency, at most 8).
int thread_count();

/// Runs fn(i) for i in [0, count) on thread_count() workers. The first
/// exception thrown by a worker is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace coulgreen
