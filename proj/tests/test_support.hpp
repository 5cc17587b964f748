#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

#include "doctest.h"

namespace testing {

using Complex = std::complex<double>;

inline double rel_diff(Complex got, Complex want) {
  return std::abs(got - want) / std::max(1e-300, std::abs(want));
}

/// Relative closeness, absolute near zero.
inline bool close(Complex got, Complex want, double tol) {
  return std::abs(got - want) <= tol * std::max(1.0, std::abs(want));
}

}  // namespace testing

#define CHECK_CLOSE(got, want, tol)                                                         \
  do {                                                                                      \
    const std::complex<double> got_ = (got), want_ = (want);                                \
    INFO("got " << got_ << " want " << want_ << " |diff| " << std::abs(got_ - want_));      \
    CHECK(testing::close(got_, want_, (tol)));                                              \
  } while (0)
