#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "coulgreen/operator_matrices.hpp"
#include "coulgreen/quadrature.hpp"

namespace coulgreen {

struct CheckResult {
  std::string suite;
  std::string name;
  std::string identity;  // the relation being certified
  double value = 0.0;    // measured residual / deviation
  double tolerance = 0.0;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  PhysicalParams params{1.0, 1.0, 0.7, 0.0};
  int order = 0;  // 0: each suite uses its own default
  QuadratureConfig quadrature;
  bool ablate_pole_term = false;
  Complex gauge_y{3.7, 0.0};
};

const std::vector<std::string>& verify_suites();

/// Runs one suite. Numerical failures inside a check are reported as failed
/// checks; input validation errors propagate.
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opt);

nlohmann::json report_json(const std::vector<CheckResult>& results, const VerifyOptions& opt);

}  // namespace coulgreen
