#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "jcm/thermal.hpp"

namespace jcm {

/// Largest oracle truncation used by the validation suite.
inline constexpr int kOracleMaxNCut = 60;

/// Distribution and oracle truncation for comparing the analytic and dense
/// solutions at a given nbar. Uses the smallest tail_eps in
/// {1e-12, 1e-11, ..., 1e-3} whose cutoff leaves the guard band
/// n_cut = N_max + 2 <= max_n_cut.
struct OracleSetup {
  ThermalDistribution dist;
  int n_cut = 0;
};

OracleSetup oracle_setup(double nbar, int max_n_cut = kOracleMaxNCut);

struct CheckResult {
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string detail;
};

struct ValidationOptions {
  /// Noise amplitude injected into the analytic block amplitudes before the
  /// oracle comparison (negative control).
  double perturb = 0.0;
};

std::vector<CheckResult> run_validation(const ValidationOptions& options = {});

void print_report(std::ostream& out, const std::vector<CheckResult>& checks);

}  // namespace jcm
