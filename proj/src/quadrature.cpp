#include "coulgreen/quadrature.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <numbers>
#include <thread>

#include "coulgreen/errors.hpp"

namespace coulgreen {

GaussRule gauss_legendre(int n) {
  if (n < 1 || n > 512) throw DomainError("Gauss-Legendre order must be in [1, 512]");
  GaussRule r;
  r.nodes.resize(static_cast<size_t>(n));
  r.weights.resize(static_cast<size_t>(n));
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    r.nodes[size_t(i)] = -x;
    r.nodes[size_t(n - 1 - i)] = x;
    r.weights[size_t(i)] = w;
    r.weights[size_t(n - 1 - i)] = w;
  }
  if (n % 2 == 1) r.nodes[size_t(n / 2)] = 0.0;
  return r;
}

std::string to_string(TailStrategy s) {
  return s == TailStrategy::kRichardson ? "richardson" : "partial-sum-averaging";
}

TailStrategy tail_strategy_from_string(const std::string& s) {
  if (s == "richardson") return TailStrategy::kRichardson;
  if (s == "partial-sum-averaging") return TailStrategy::kPartialSumAveraging;
  throw DomainError("unknown tail strategy: " + s);
}

void QuadratureConfig::validate() const {
  if (pv_epsilon_schedule.size() < 2) throw DomainError("epsilon schedule needs at least two entries");
  for (size_t i = 0; i < pv_epsilon_schedule.size(); ++i) {
    const double e = pv_epsilon_schedule[i];
    if (!(e > 0.0) || !std::isfinite(e)) throw DomainError("epsilon schedule entries must be positive");
    if (i > 0 && !(e < pv_epsilon_schedule[i - 1]))
      throw DomainError("epsilon schedule must be strictly decreasing");
  }
  if (pv_epsilon_schedule.front() >= 0.5) throw DomainError("largest epsilon must be below 0.5");
  if (!(tail_cutoff > 1.0) || !std::isfinite(tail_cutoff)) throw DomainError("tail cutoff must exceed 1");
  if (panel_nodes < 2 || panel_nodes > 512) throw DomainError("panel node count must be in [2, 512]");
  if (!(target_tol > 0.0)) throw DomainError("target tolerance must be positive");
}

ExtrapolationResult neville_to_zero(const std::vector<double>& x, const std::vector<Complex>& y) {
  if (x.size() != y.size() || x.empty()) throw DimensionError("neville: mismatched samples");
  auto extrapolate = [&](size_t first) {
    std::vector<Complex> p(y.begin() + long(first), y.end());
    const size_t n = p.size();
    for (size_t level = 1; level < n; ++level)
      for (size_t i = 0; i + level < n; ++i) {
        const double xi = x[first + i], xj = x[first + i + level];
        p[i] = (xj * p[i] - xi * p[i + 1]) / (xj - xi);
      }
    return p[0];
  };
  const Complex full = extrapolate(0);
  if (x.size() == 1) return {full, INFINITY};
  const Complex reduced = extrapolate(1);
  return {full, std::abs(full - reduced)};
}

int thread_count() {
  if (const char* env = std::getenv("COULGREEN_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return std::min(n, 256);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return static_cast<int>(std::clamp(hw, 1u, 8u));
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
  const size_t workers = std::min<size_t>(static_cast<size_t>(thread_count()), count);
  if (workers <= 1) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(count);
      }
    }
  };
  std::vector<std::thread> pool;
  for (size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

namespace {

struct Panel {
  double lo, hi;
};

// Integrates the folded integrand f(t) + f(-t) over each panel. Node
// evaluations run in parallel; every panel's sum is accumulated in node order
// so the result does not depend on scheduling.
std::vector<std::vector<Complex>> folded_panels(const VectorIntegrand& f, size_t dim,
                                                const std::vector<Panel>& panels,
                                                const GaussRule& rule, long& evaluations) {
  const size_t nodes = rule.nodes.size();
  const size_t jobs = panels.size() * nodes * 2;
  std::vector<Complex> buffer(jobs * dim);
  parallel_for(jobs, [&](size_t job) {
    const size_t panel = job / (2 * nodes);
    const size_t node = (job / 2) % nodes;
    const double sign = (job % 2 == 0) ? 1.0 : -1.0;
    const Panel& pn = panels[panel];
    const double t = 0.5 * (pn.lo + pn.hi) + 0.5 * (pn.hi - pn.lo) * rule.nodes[node];
    f(sign * t, std::span<Complex>(buffer.data() + job * dim, dim));
  });
  evaluations += static_cast<long>(jobs);
  std::vector<std::vector<Complex>> out(panels.size(), std::vector<Complex>(dim));
  for (size_t panel = 0; panel < panels.size(); ++panel) {
    const double half = 0.5 * (panels[panel].hi - panels[panel].lo);
    for (size_t node = 0; node < nodes; ++node) {
      const double w = half * rule.weights[node];
      const size_t base = (panel * nodes + node) * 2 * dim;
      for (size_t c = 0; c < dim; ++c) out[panel][c] += w * (buffer[base + c] + buffer[base + dim + c]);
    }
  }
  return out;
}

double max_abs(const std::vector<Complex>& v) {
  double m = 0.0;
  for (const auto& z : v) m = std::max(m, std::abs(z));
  return m;
}

void check_finite(const std::vector<Complex>& v) {
  for (const auto& z : v)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw ConvergenceError("quadrature produced a non-finite value", INFINITY);
}

}  // namespace

IntegralResult pv_integrate(const VectorIntegrand& f, std::size_t dim, const QuadratureConfig& cfg) {
  cfg.validate();
  if (dim == 0) throw DimensionError("pv_integrate: empty integrand");
  const GaussRule rule = gauss_legendre(cfg.panel_nodes);
  IntegralResult res;
  const auto& eps = cfg.pv_epsilon_schedule;
  const double emax = eps.front();

  // Pieces [eps_i, emax] of the excluded neighbourhood.
  std::vector<Panel> inner;
  for (size_t i = 1; i < eps.size(); ++i) inner.push_back({eps[i], emax});
  const auto inner_vals = folded_panels(f, dim, inner, rule, res.evaluations);

  // Outer part [emax, 1] then unit panels until negligible.
  std::vector<Complex> outer(dim);
  double lo = emax;
  int quiet = 0;
  bool converged = false;
  double last_norm = INFINITY;
  const int batch = std::max(1, thread_count());
  while (!converged) {
    std::vector<Panel> panels;
    for (int i = 0; i < batch && lo < cfg.tail_cutoff; ++i) {
      const double hi = std::min(cfg.tail_cutoff, lo < 1.0 ? 1.0 : lo + 1.0);
      panels.push_back({lo, hi});
      lo = hi;
    }
    if (panels.empty()) break;
    const auto vals = folded_panels(f, dim, panels, rule, res.evaluations);
    for (size_t i = 0; i < panels.size(); ++i) {
      for (size_t c = 0; c < dim; ++c) outer[c] += vals[i][c];
      res.cutoff = panels[i].hi;
      last_norm = max_abs(vals[i]);
      if (last_norm <= 1e-16 * std::max(1.0, max_abs(outer))) {
        if (++quiet >= 3) {
          converged = true;
          // panels evaluated beyond this one only exist because of batching
          res.evaluations -= static_cast<long>((panels.size() - 1 - i) * rule.nodes.size() * 2);
          break;
        }
      } else {
        quiet = 0;
      }
    }
  }
  check_finite(outer);
  if (!converged)
    throw ConvergenceError("principal-value integral: tail not negligible at the cutoff",
                           last_norm);

  std::vector<double> xs(eps.begin(), eps.end());
  res.values.resize(dim);
  double worst = 0.0;
  for (size_t c = 0; c < dim; ++c) {
    std::vector<Complex> ys;
    ys.push_back(outer[c]);
    for (size_t i = 0; i < inner.size(); ++i) ys.push_back(outer[c] + inner_vals[i][c]);
    const ExtrapolationResult e = neville_to_zero(xs, ys);
    res.values[c] = e.value;
    worst = std::max(worst, e.error);
  }
  check_finite(res.values);
  res.error_estimate = worst + 1e-16 * std::max(1.0, max_abs(outer)) * 3.0;
  return res;
}

IntegralResult tail_integrate(const VectorIntegrand& f, std::size_t dim, const QuadratureConfig& cfg) {
  cfg.validate();
  if (dim == 0) throw DimensionError("tail_integrate: empty integrand");
  const GaussRule rule = gauss_legendre(cfg.panel_nodes);
  const double T = cfg.tail_cutoff;
  IntegralResult res;
  res.cutoff = T;
  // Panels widen geometrically with distance from the origin.
  std::vector<Panel> panels;
  std::vector<double> cut_points{T / 4.0, T / 2.0, T};
  double lo = 0.0;
  for (double end : cut_points) {
    while (lo < end) {
      const double hi = std::min(end, lo + std::max(1.0, 0.125 * lo));
      panels.push_back({lo, hi});
      lo = hi;
    }
  }
  const auto vals = folded_panels(f, dim, panels, rule, res.evaluations);

  res.values.resize(dim);
  std::vector<std::vector<Complex>> partial;  // partial integral after each panel
  std::vector<Complex> run(dim);
  for (const auto& v : vals) {
    for (size_t c = 0; c < dim; ++c) run[c] += v[c];
    partial.push_back(run);
  }
  check_finite(run);
  double worst = 0.0;
  if (cfg.oscillatory_strategy == TailStrategy::kRichardson) {
    std::vector<size_t> at_cut;
    for (double end : cut_points)
      for (size_t i = 0; i < panels.size(); ++i)
        if (panels[i].hi == end) at_cut.push_back(i);
    const std::vector<double> xs{4.0 / T, 2.0 / T, 1.0 / T};
    for (size_t c = 0; c < dim; ++c) {
      std::vector<Complex> ys;
      for (size_t i : at_cut) ys.push_back(partial[i][c]);
      const ExtrapolationResult e = neville_to_zero(xs, ys);
      res.values[c] = e.value;
      worst = std::max(worst, e.error);
    }
  } else {
    // Averaging cancels oscillation but not a monotone 1/T drift; the
    // window's spread (doubled) bounds what is left of such a drift.
    for (size_t c = 0; c < dim; ++c) {
      Complex mean{};
      double spread = 0.0;
      int count = 0;
      for (size_t i = 0; i < panels.size(); ++i)
        if (panels[i].hi > T / 2.0) {
          mean += partial[i][c];
          spread = std::max(spread, std::abs(partial[i][c] - partial.back()[c]));
          ++count;
        }
      mean /= static_cast<double>(count);
      res.values[c] = mean;
      worst = std::max(worst, 2.0 * std::max(spread, std::abs(mean - partial.back()[c])));
    }
  }
  res.error_estimate = worst;
  // A growing integrand makes the partial sums drift as fast as they move;
  // extrapolating that would return a confident number for a divergent integral.
  double scale = 1.0;
  for (const Complex& v : res.values) scale = std::max(scale, std::abs(v));
  if (!(worst <= 0.1 * scale))
    throw ConvergenceError("tail_integrate: partial integrals do not settle at T = " + std::to_string(T), worst);
  return res;
}

}  // namespace coulgreen
