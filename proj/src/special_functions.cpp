#include "coulgreen/special_functions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "coulgreen/errors.hpp"

namespace coulgreen {

namespace {

using Real = long double;
using ComplexL = std::complex<long double>;

constexpr double kAcceptTol = 1e-10;
constexpr double kGoodTol = 1e-14;
constexpr Real kEpsL = std::numeric_limits<Real>::epsilon();
constexpr double kEpsD = std::numeric_limits<double>::epsilon();

bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_finite(Complex z, const char* what) {
  if (!is_finite(z)) throw DomainError(std::string(what) + ": non-finite argument");
}

bool is_nonpositive_integer(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// Integer closest to z when z is (numerically) an integer, else nothing useful.
bool is_integer_like(Complex z, double tol) {
  return std::abs(z.imag()) <= tol && std::abs(z.real() - std::round(z.real())) <= tol;
}

Complex checked(Complex z, const char* what) {
  if (!is_finite(z)) throw ConvergenceError(std::string(what) + ": result is not finite", INFINITY);
  return z;
}

// ---------------------------------------------------------------------------
// Series kernels (extended precision)

struct SeriesSum {
  ComplexL sum{1.0L, 0.0L};
  Real abs_sum = 1.0L;  // sum of |terms|, drives the round-off estimate
  Real tail = 0.0L;     // truncation estimate
  bool converged = false;
  bool terminated = false;

  double rel_error() const {
    const Real mag = std::abs(sum);
    if (mag == 0.0L) return terminated ? 0.0 : INFINITY;
    const Real est = (4.0L * kEpsL * abs_sum + tail) / mag;
    return std::max(static_cast<double>(est), kEpsD);
  }
};

// Generic pFq-like stepping for 2F1 / 1F1 with the ratio supplied per index.
SeriesSum sum_2f1(ComplexL a, ComplexL b, ComplexL c, ComplexL z, int max_terms = 20000) {
  SeriesSum s;
  ComplexL term{1.0L, 0.0L};
  int small_run = 0;
  for (int j = 0; j < max_terms; ++j) {
    const Real jl = static_cast<Real>(j);
    const ComplexL an = a + jl;
    const ComplexL bn = b + jl;
    if (an == ComplexL{} || bn == ComplexL{}) {
      s.converged = s.terminated = true;
      return s;
    }
    const ComplexL cn = c + jl;
    if (cn == ComplexL{}) throw PoleError("gauss_2f1: c is a non-positive integer");
    const ComplexL ratio = an * bn / (cn * (jl + 1.0L));
    term *= ratio * z;
    s.sum += term;
    const Real at = std::abs(term);
    s.abs_sum += at;
    // |ratio * z| tends to |z|; once it is below one the tail is geometric.
    const Real next_ratio = std::abs((an + 1.0L) * (bn + 1.0L) / ((cn + 1.0L) * (jl + 2.0L)) * z);
    if (next_ratio < 1.0L && at <= 1e-21L * std::abs(s.sum)) {
      if (++small_run >= 2) {
        s.tail = at * next_ratio / (1.0L - next_ratio);
        s.converged = true;
        return s;
      }
    } else {
      small_run = 0;
    }
    if (!std::isfinite(at)) break;
  }
  s.tail = INFINITY;
  return s;
}

SeriesSum sum_1f1(ComplexL a, ComplexL b, ComplexL z, int max_terms = 20000) {
  SeriesSum s;
  ComplexL term{1.0L, 0.0L};
  int small_run = 0;
  for (int j = 0; j < max_terms; ++j) {
    const Real jl = static_cast<Real>(j);
    const ComplexL an = a + jl;
    if (an == ComplexL{}) {
      s.converged = s.terminated = true;
      return s;
    }
    const ComplexL bn = b + jl;
    if (bn == ComplexL{}) throw PoleError("kummer_1f1: b is a non-positive integer");
    term *= an / (bn * (jl + 1.0L)) * z;
    s.sum += term;
    const Real at = std::abs(term);
    s.abs_sum += at;
    const Real next_ratio = std::abs((an + 1.0L) / ((bn + 1.0L) * (jl + 2.0L)) * z);
    if (next_ratio < 0.5L && at <= 1e-21L * std::abs(s.sum)) {
      if (++small_run >= 2) {
        s.tail = at * next_ratio / (1.0L - next_ratio);
        s.converged = true;
        return s;
      }
    } else {
      small_run = 0;
    }
    if (!std::isfinite(at)) break;
  }
  s.tail = INFINITY;
  return s;
}

// A term of a connection formula: coefficient times a series value.
struct Piece {
  Complex value;
  double rel_error;
};

Piece combine(std::initializer_list<Piece> pieces) {
  Complex total{};
  double abs_err = 0.0;
  for (const auto& p : pieces) {
    total += p.value;
    abs_err += std::abs(p.value) * p.rel_error;
  }
  const double mag = std::abs(total);
  return {total, mag == 0.0 ? INFINITY : abs_err / mag};
}

// Relative error carried by a gamma-ratio prefactor built from log_gamma.
double lgamma_error(std::initializer_list<Complex> args) {
  double e = 0.0;
  for (const auto& z : args) {
    if (is_nonpositive_integer(z)) continue;
    e += 2.0 * kEpsD * (1.0 + std::abs(log_gamma(z)));
  }
  return e;
}

// exp(sum of +/- log_gamma) with zero for reciprocal poles; `num` must be pole free.
Complex gamma_ratio(std::initializer_list<Complex> num, std::initializer_list<Complex> den) {
  Complex lg{};
  for (const auto& z : num) lg += log_gamma(z);
  for (const auto& z : den) {
    if (is_nonpositive_integer(z)) return Complex{};
    lg -= log_gamma(z);
  }
  return std::exp(lg);
}

Piece series_piece(Complex a, Complex b, Complex c, Complex z) {
  const SeriesSum s = sum_2f1(a, b, c, z);
  return {Complex(static_cast<double>(s.sum.real()), static_cast<double>(s.sum.imag())),
          s.rel_error()};
}

// Maclaurin series of F at z, raw and Euler-transformed; best of the two.
Piece direct_piece(Complex a, Complex b, Complex c, Complex z) {
  Piece raw = series_piece(a, b, c, z);
  if (raw.rel_error <= kGoodTol) return raw;
  const Complex d = c - a - b;
  if (z == Complex{1.0, 0.0}) return raw;
  Piece euler = series_piece(c - a, c - b, c, z);
  euler.value *= principal_power(1.0 - z, d);
  euler.rel_error += kEpsD * (1.0 + std::abs(d * principal_log(1.0 - z)));
  return euler.rel_error < raw.rel_error ? euler : raw;
}

Piece pfaff_piece(Complex a, Complex b, Complex c, Complex z) {
  const Complex w = z / (z - 1.0);
  const Complex lg1 = principal_log(1.0 - z);
  Piece first = direct_piece(a, c - b, c, w);
  first.value *= std::exp(-a * lg1);
  first.rel_error += kEpsD * (1.0 + std::abs(a * lg1));
  if (first.rel_error <= kGoodTol) return first;
  Piece second = direct_piece(c - a, b, c, w);
  second.value *= std::exp(-b * lg1);
  second.rel_error += kEpsD * (1.0 + std::abs(b * lg1));
  return second.rel_error < first.rel_error ? second : first;
}

// z -> 1 - z; requires c - a - b not an integer.
Piece one_minus_piece(Complex a, Complex b, Complex c, Complex z) {
  const Complex d = c - a - b;
  const Complex w = 1.0 - z;
  Piece p1 = direct_piece(a, b, 1.0 - d, w);
  p1.value *= gamma_ratio({c, d}, {c - a, c - b});
  p1.rel_error += lgamma_error({c, d, c - a, c - b});
  Piece p2 = direct_piece(c - a, c - b, d + 1.0, w);
  p2.value *= gamma_ratio({c, -d}, {a, b}) * principal_power(w, d);
  p2.rel_error += lgamma_error({c, -d, a, b}) + kEpsD * std::abs(d * principal_log(w));
  return combine({p1, p2});
}

// z -> 1/z; requires a - b not an integer.
Piece inverse_piece(Complex a, Complex b, Complex c, Complex z) {
  const Complex w = 1.0 / z;
  const Complex mz = -z;
  Piece p1 = direct_piece(a, 1.0 - c + a, 1.0 - b + a, w);
  p1.value *= gamma_ratio({c, b - a}, {b, c - a}) * principal_power(mz, -a);
  p1.rel_error += lgamma_error({c, b - a, b, c - a}) + kEpsD * std::abs(a * principal_log(mz));
  Piece p2 = direct_piece(b, 1.0 - c + b, 1.0 - a + b, w);
  p2.value *= gamma_ratio({c, a - b}, {a, c - b}) * principal_power(mz, -b);
  p2.rel_error += lgamma_error({c, a - b, a, c - b}) + kEpsD * std::abs(b * principal_log(mz));
  return combine({p1, p2});
}

// z -> 1/(1 - z); requires a - b not an integer.
Piece inverse_one_minus_piece(Complex a, Complex b, Complex c, Complex z) {
  const Complex w = 1.0 / (1.0 - z);
  const Complex omz = 1.0 - z;
  Piece p1 = direct_piece(a, c - b, a - b + 1.0, w);
  p1.value *= gamma_ratio({c, b - a}, {b, c - a}) * principal_power(omz, -a);
  p1.rel_error += lgamma_error({c, b - a, b, c - a}) + kEpsD * std::abs(a * principal_log(omz));
  Piece p2 = direct_piece(b, c - a, b - a + 1.0, w);
  p2.value *= gamma_ratio({c, a - b}, {a, c - b}) * principal_power(omz, -b);
  p2.rel_error += lgamma_error({c, a - b, a, c - b}) + kEpsD * std::abs(b * principal_log(omz));
  return combine({p1, p2});
}

// z -> 1 - 1/z; requires c - a - b not an integer.
Piece one_minus_inverse_piece(Complex a, Complex b, Complex c, Complex z) {
  const Complex d = c - a - b;
  const Complex w = 1.0 - 1.0 / z;
  Piece p1 = direct_piece(a, a - c + 1.0, 1.0 - d, w);
  p1.value *= gamma_ratio({c, d}, {c - a, c - b}) * principal_power(z, -a);
  p1.rel_error += lgamma_error({c, d, c - a, c - b}) + kEpsD * std::abs(a * principal_log(z));
  Piece p2 = direct_piece(c - a, 1.0 - a, d + 1.0, w);
  p2.value *= gamma_ratio({c, -d}, {a, b}) * principal_power(1.0 - z, d) *
              principal_power(z, a - c);
  p2.rel_error += lgamma_error({c, -d, a, b}) +
                  kEpsD * (std::abs(d * principal_log(1.0 - z)) +
                           std::abs((a - c) * principal_log(z)));
  return combine({p1, p2});
}

// Taylor continuation of the hypergeometric ODE
//   z(1-z) F'' + [c - (a+b+1) z] F' - a b F = 0
// along the ray from z0 = z/(2|z|) to z. Each step re-expands around the
// current point with a radius at most half the distance to {0, 1}. The step
// is linear in (F, F'), so it is carried as a 2x2 transfer matrix and the
// absolute errors of (F, F') are propagated through its magnitude.
Piece taylor_piece(Complex a, Complex b, Complex c, Complex z) {
  const Complex z0 = 0.5 * z / std::abs(z);
  const Piece f0 = direct_piece(a, b, c, z0);
  Piece df0 = direct_piece(a + 1.0, b + 1.0, c + 1.0, z0);
  df0.value *= a * b / c;

  const ComplexL al(a.real(), a.imag()), bl(b.real(), b.imag()), cl(c.real(), c.imag());
  ComplexL cur(z0.real(), z0.imag());
  const ComplexL target(z.real(), z.imag());
  ComplexL f(f0.value.real(), f0.value.imag());
  ComplexL df(df0.value.real(), df0.value.imag());
  Real err_f = std::abs(f) * f0.rel_error;
  Real err_d = std::abs(df) * df0.rel_error;

  for (int step = 0; step < 4000; ++step) {
    const ComplexL remaining = target - cur;
    const Real dist = std::abs(remaining);
    if (dist == 0.0L) break;
    const Real radius = std::min(std::abs(cur), std::abs(1.0L - cur));
    const Real hmax = 0.5L * radius;
    const ComplexL h = dist <= hmax ? remaining : remaining * (hmax / dist);
    const ComplexL p0 = cur * (1.0L - cur);
    const ComplexL p1 = 1.0L - 2.0L * cur;
    const ComplexL q0 = cl - (al + bl + 1.0L) * cur;

    // columns: response to (F, F') = (1, 0) and (0, 1)
    std::array<ComplexL, 2> ck = {ComplexL{1.0L}, ComplexL{}};
    std::array<ComplexL, 2> ck1 = {ComplexL{}, ComplexL{1.0L}};
    std::array<ComplexL, 2> mf = {ComplexL{1.0L}, ComplexL{}};
    std::array<ComplexL, 2> md = {ComplexL{}, ComplexL{}};
    std::array<Real, 2> af = {1.0L, 0.0L}, ad = {0.0L, 0.0L};
    ComplexL hk{1.0L, 0.0L};
    int small_run = 0;
    bool done = false;
    for (int k = 0; k < 5000 && !done; ++k) {
      const Real kl = static_cast<Real>(k);
      Real biggest = 0.0L;
      for (int col = 0; col < 2; ++col) {
        const ComplexL ck2 =
            ((kl + al) * (kl + bl) * ck[col] - (kl + 1.0L) * (p1 * kl + q0) * ck1[col]) /
            ((kl + 1.0L) * (kl + 2.0L) * p0);
        const ComplexL tf = ck1[col] * hk * h;
        const ComplexL td = (kl + 1.0L) * ck1[col] * hk;
        mf[col] += tf;
        md[col] += td;
        af[col] += std::abs(tf);
        ad[col] += std::abs(td);
        biggest = std::max({biggest, std::abs(tf), std::abs(td) * std::abs(h)});
        ck[col] = ck1[col];
        ck1[col] = ck2;
      }
      hk *= h;
      const Real scale = std::max({std::abs(mf[0]), std::abs(mf[1]), std::abs(md[0]) * std::abs(h),
                                   std::abs(md[1]) * std::abs(h)});
      if (biggest <= 1e-22L * scale) {
        if (++small_run >= 3) done = true;
      } else {
        small_run = 0;
      }
      if (!std::isfinite(af[0] + af[1] + ad[0] + ad[1])) return {Complex{}, INFINITY};
    }
    if (!done) return {Complex{}, INFINITY};
    const ComplexL fn = mf[0] * f + mf[1] * df;
    const ComplexL dn = md[0] * f + md[1] * df;
    const Real rf = 4.0L * kEpsL * (af[0] * std::abs(f) + af[1] * std::abs(df));
    const Real rd = 4.0L * kEpsL * (ad[0] * std::abs(f) + ad[1] * std::abs(df));
    const Real ef = std::abs(mf[0]) * err_f + std::abs(mf[1]) * err_d + rf;
    const Real ed = std::abs(md[0]) * err_f + std::abs(md[1]) * err_d + rd;
    f = fn;
    df = dn;
    err_f = ef;
    err_d = ed;
    cur += h;
  }
  if (cur != target) return {Complex{}, INFINITY};
  const Real mag = std::abs(f);
  if (mag == 0.0L) return {Complex{}, INFINITY};
  return {Complex(static_cast<double>(f.real()), static_cast<double>(f.imag())),
          std::max(static_cast<double>(err_f / mag), kEpsD)};
}

}  // namespace

// ---------------------------------------------------------------------------

bool near_nonpositive_integer(Complex z, double tol) {
  if (z.real() > tol) return false;
  return is_integer_like(z, tol) && std::round(z.real()) <= 0.0;
}

Complex principal_log(Complex z) {
  double arg = std::atan2(z.imag(), z.real());
  if (arg == -std::numbers::pi) arg = std::numbers::pi;
  return {std::log(std::abs(z)), arg};
}

Complex principal_power(Complex base, Complex exponent) {
  require_finite(base, "principal_power");
  require_finite(exponent, "principal_power");
  if (base == Complex{}) throw DomainError("principal_power: zero base");
  if (exponent == Complex{}) return {1.0, 0.0};
  return checked(std::exp(exponent * principal_log(base)), "principal_power");
}

Complex log_gamma(Complex z) {
  require_finite(z, "log_gamma");
  if (is_nonpositive_integer(z)) throw PoleError("log_gamma: pole at non-positive integer");

  // Shift into Re z >= 12 where the Stirling series is accurate to < 1e-19.
  ComplexL zl(z.real(), z.imag());
  ComplexL shift{};
  while (zl.real() < 12.0L) {
    const ComplexL lz = std::log(zl);
    // keep the cut on the upper lip for real negative arguments
    shift += (zl.imag() == 0.0L && zl.real() < 0.0L)
                 ? ComplexL(std::log(-zl.real()), std::numbers::pi_v<Real>)
                 : lz;
    zl += 1.0L;
  }
  static constexpr std::array<Real, 9> kStirling = {
      1.0L / 12.0L,        -1.0L / 360.0L,         1.0L / 1260.0L,
      -1.0L / 1680.0L,     1.0L / 1188.0L,         -691.0L / 360360.0L,
      1.0L / 156.0L,       -3617.0L / 122400.0L,   43867.0L / 244188.0L};
  const ComplexL inv = 1.0L / zl;
  const ComplexL inv2 = inv * inv;
  ComplexL series{};
  ComplexL pw = inv;
  for (const Real coef : kStirling) {
    series += coef * pw;
    pw *= inv2;
  }
  const ComplexL lg = (zl - 0.5L) * std::log(zl) - zl +
                      0.5L * std::log(2.0L * std::numbers::pi_v<Real>) + series - shift;
  return {static_cast<double>(lg.real()), static_cast<double>(lg.imag())};
}

Complex gamma(Complex z) {
  const Complex lg = log_gamma(z);
  if (lg.real() > 709.0) throw DomainError("gamma: overflow");
  return std::exp(lg);
}

Complex rgamma(Complex z) {
  require_finite(z, "rgamma");
  if (is_nonpositive_integer(z)) return {};
  const Complex lg = log_gamma(z);
  if (-lg.real() > 709.0) throw DomainError("rgamma: overflow");
  return std::exp(-lg);
}

Complex pochhammer(Complex a, int n) {
  if (n < 0) throw DomainError("pochhammer: negative order");
  ComplexL acc{1.0L, 0.0L};
  const ComplexL al(a.real(), a.imag());
  for (int j = 0; j < n; ++j) acc *= al + static_cast<Real>(j);
  return checked({static_cast<double>(acc.real()), static_cast<double>(acc.imag())},
                 "pochhammer");
}

HypergeometricValue gauss_2f1_detail(Complex a, Complex b, Complex c, Complex z) {
  require_finite(a, "gauss_2f1");
  require_finite(b, "gauss_2f1");
  require_finite(c, "gauss_2f1");
  require_finite(z, "gauss_2f1");
  if (z == Complex{}) return {{1.0, 0.0}, 0.0, "trivial"};

  const bool terminating = is_nonpositive_integer(a) || is_nonpositive_integer(b);
  if (terminating) {
    const double n = -std::max(is_nonpositive_integer(a) ? a.real() : -INFINITY,
                               is_nonpositive_integer(b) ? b.real() : -INFINITY);
    if (is_nonpositive_integer(c) && -c.real() < n)
      throw PoleError("gauss_2f1: c is a non-positive integer above the termination order");
    const SeriesSum s = sum_2f1({a.real(), a.imag()}, {b.real(), b.imag()}, {c.real(), c.imag()},
                                {z.real(), z.imag()}, static_cast<int>(n) + 2);
    return {checked({static_cast<double>(s.sum.real()), static_cast<double>(s.sum.imag())},
                    "gauss_2f1"),
            s.rel_error(), "terminating"};
  }
  if (is_nonpositive_integer(c)) throw PoleError("gauss_2f1: c is a non-positive integer");

  if (z.imag() == 0.0 && z.real() >= 1.0) {
    if (z.real() == 1.0 && (c - a - b).real() > 0.0) {
      const Complex v = gamma_ratio({c, c - a - b}, {c - a, c - b});
      return {checked(v, "gauss_2f1"), lgamma_error({c, c - a - b, c - a, c - b}), "gauss-sum"};
    }
    throw DomainError("gauss_2f1: argument on the branch cut [1, inf)");
  }

  struct Route {
    double radius;
    int kind;
  };
  const double d_int_tol = 1e-8;
  const bool cab_integer = is_integer_like(c - a - b, d_int_tol);
  const bool ab_integer = is_integer_like(a - b, d_int_tol);
  std::vector<Route> routes;
  routes.push_back({std::abs(z), 0});
  routes.push_back({std::abs(z / (z - 1.0)), 1});
  if (!cab_integer) {
    routes.push_back({std::abs(1.0 - z), 2});
    routes.push_back({std::abs(1.0 - 1.0 / z), 5});
  }
  if (!ab_integer) {
    routes.push_back({std::abs(1.0 / z), 3});
    routes.push_back({std::abs(1.0 / (1.0 - z)), 4});
  }
  std::stable_sort(routes.begin(), routes.end(),
                   [](const Route& x, const Route& y) { return x.radius < y.radius; });

  static constexpr std::array<std::string_view, 7> kNames = {
      "series", "pfaff", "one-minus-z", "inverse-z", "inverse-one-minus-z",
      "one-minus-inverse-z", "taylor-continuation"};

  Piece best{Complex{}, INFINITY};
  int best_kind = -1;
  auto consider = [&](const Piece& p, int kind) {
    if (std::isfinite(p.rel_error) && is_finite(p.value) && p.rel_error < best.rel_error) {
      best = p;
      best_kind = kind;
    }
  };
  for (const auto& r : routes) {
    if (r.radius > 0.9) break;
    if (best.rel_error <= kGoodTol) break;
    try {
      switch (r.kind) {
        case 0: consider(direct_piece(a, b, c, z), 0); break;
        case 1: consider(pfaff_piece(a, b, c, z), 1); break;
        case 2: consider(one_minus_piece(a, b, c, z), 2); break;
        case 3: consider(inverse_piece(a, b, c, z), 3); break;
        case 4: consider(inverse_one_minus_piece(a, b, c, z), 4); break;
        case 5: consider(one_minus_inverse_piece(a, b, c, z), 5); break;
        default: break;
      }
    } catch (const DomainError&) {
      // a Gamma overflow in a connection coefficient: try the next route
    }
  }
  if (best.rel_error > 1e-13 && std::abs(z) > 0.5) {
    try {
      consider(taylor_piece(a, b, c, z), 6);
    } catch (const DomainError&) {
    }
  }
  if (best_kind < 0 || !(best.rel_error <= kAcceptTol)) {
    throw ConvergenceError("gauss_2f1: no evaluation route reached the target accuracy",
                           best.rel_error);
  }
  return {best.value, best.rel_error, kNames[static_cast<size_t>(best_kind)]};
}

Complex gauss_2f1(Complex a, Complex b, Complex c, Complex z) {
  const HypergeometricValue v = gauss_2f1_detail(a, b, c, z);
  if (v.rel_error > kAcceptTol)
    throw ConvergenceError("gauss_2f1: degraded precision", v.rel_error);
  return v.value;
}

HypergeometricValue kummer_1f1_detail(Complex a, Complex b, Complex z) {
  require_finite(a, "kummer_1f1");
  require_finite(b, "kummer_1f1");
  require_finite(z, "kummer_1f1");
  if (z == Complex{} || a == Complex{}) return {{1.0, 0.0}, 0.0, "trivial"};
  const bool terminating = is_nonpositive_integer(a);
  if (is_nonpositive_integer(b) && !(terminating && -b.real() >= -a.real()))
    throw PoleError("kummer_1f1: b is a non-positive integer");

  Piece best{Complex{}, INFINITY};
  std::string_view method = "series";
  auto take = [&](const Piece& p, std::string_view m) {
    if (std::isfinite(p.rel_error) && is_finite(p.value) && p.rel_error < best.rel_error) {
      best = p;
      method = m;
    }
  };

  const double az = std::abs(z);
  if (terminating || az <= 60.0) {
    const SeriesSum s = sum_1f1({a.real(), a.imag()}, {b.real(), b.imag()}, {z.real(), z.imag()});
    take({{static_cast<double>(s.sum.real()), static_cast<double>(s.sum.imag())}, s.rel_error()},
         "series");
    if (!terminating && best.rel_error > kGoodTol && z.real() > 0.0) {
      // Kummer's transformation 1F1(a;b;z) = e^z 1F1(b-a;b;-z)
      const SeriesSum t =
          sum_1f1({(b - a).real(), (b - a).imag()}, {b.real(), b.imag()}, {-z.real(), -z.imag()});
      const Complex ez = std::exp(z);
      take({ez * Complex(static_cast<double>(t.sum.real()), static_cast<double>(t.sum.imag())),
            t.rel_error() + kEpsD * az},
           "kummer-series");
    }
  }
  if (!terminating && az >= 20.0 && best.rel_error > kGoodTol) {
    // Poincare expansions of the two exponential sectors, summed to the smallest term.
    auto asymptotic = [&](Complex p, Complex q, Complex x) -> Piece {
      Complex sum{1.0, 0.0}, term{1.0, 0.0};
      double abs_sum = 1.0, prev = INFINITY;
      for (int s = 0; s < 500; ++s) {
        const Complex next = term * (p + double(s)) * (q + double(s)) / (double(s + 1) * x);
        const double an = std::abs(next);
        if (an >= prev || an == 0.0) break;
        term = next;
        prev = an;
        sum += term;
        abs_sum += an;
        if (an <= 1e-17 * std::abs(sum)) break;
      }
      return {sum, (prev + 4.0 * kEpsD * abs_sum) / std::abs(sum)};
    };
    const Piece s1 = asymptotic(a, a - b + 1.0, -z);
    const Piece s2 = asymptotic(b - a, 1.0 - a, z);
    const Complex gb = gamma(b);
    Piece p1{gb * rgamma(b - a) * principal_power(-z, -a) * s1.value,
             s1.rel_error + lgamma_error({b, b - a}) + kEpsD * std::abs(a * principal_log(-z))};
    Piece p2{gb * rgamma(a) * std::exp(z + (a - b) * principal_log(z)) * s2.value,
             s2.rel_error + lgamma_error({b, a}) + kEpsD * std::abs(z + (a - b) * principal_log(z))};
    take(combine({p1, p2}), "asymptotic");
  }
  if (!(best.rel_error <= kAcceptTol))
    throw ConvergenceError("kummer_1f1: target accuracy not reached", best.rel_error);
  return {best.value, best.rel_error, method};
}

Complex kummer_1f1(Complex a, Complex b, Complex z) { return kummer_1f1_detail(a, b, z).value; }

}  // namespace coulgreen
