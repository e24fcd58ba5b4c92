#include "jcm/validate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <random>
#include <sstream>

#include "jcm/dynamics.hpp"
#include "jcm/errors.hpp"
#include "jcm/measures.hpp"
#include "jcm/scan.hpp"
#include "jcm/witness.hpp"

namespace jcm {

OracleSetup oracle_setup(double nbar, int max_n_cut) {
  for (int exponent = -12; exponent <= -3; ++exponent) {
    ThermalDistribution dist = thermal_distribution(nbar, std::pow(10.0, exponent));
    const int n_cut = dist.cutoff() + 2;
    if (n_cut <= max_n_cut) return {std::move(dist), n_cut};
  }
  throw DomainError("oracle_setup: nbar too large for an oracle truncation of " +
                    std::to_string(max_n_cut));
}

namespace {

CheckResult check_oracle(double perturb, CheckResult& verdicts) {
  const std::array<double, 4> nbars{0.0, 0.5, 1.0, 5.0};
  const std::vector<double> taus = tau_grid(10.0, 50);
  double worst = 0.0;
  int checked = 0;
  int skipped = 0;
  int mismatches = 0;
  for (double nbar : nbars) {
    const OracleSetup setup = oracle_setup(nbar);
    for (const OraclePoint& p : parallel::oracle_scan(setup.dist, setup.n_cut, 1.0, taus, perturb)) {
      worst = std::max(worst, p.trace_distance);
      checked += p.verdicts_checked;
      skipped += p.verdicts_skipped;
      mismatches += p.verdict_mismatches;
    }
  }
  verdicts = {"oracle projected-pair PPT verdicts", static_cast<double>(mismatches), 0.0,
              mismatches == 0,
              std::to_string(checked) + " compared, " + std::to_string(skipped) +
                  " undecidable at oracle resolution"};
  return {"oracle trace distance (max)", worst, 1e-8, worst <= 1e-8,
          "nbar in {0, 0.5, 1, 5}, 50 tau points in [0, 10]"};
}

CheckResult check_witness_condition() {
  const std::array<double, 4> nbars{0.1, 1.0, 10.0, 100.0};
  const std::vector<double> grid = tau_grid(25.0, 501);
  int compared = 0;
  int mismatches = 0;
  for (double nbar : nbars) {
    const ThermalDistribution dist = thermal_distribution(nbar, kDefaultTailEps, 51);
    for (long n = 1; n <= 50; ++n) {
      for (std::size_t j = 1; j < grid.size(); ++j) {
        const double lambda = lambda_witness(n, grid[j]);
        if (std::abs(lambda) <= kWitnessTol) continue;
        ++compared;
        if (inseparability_condition(dist, n, grid[j]) != (lambda > 0.0)) ++mismatches;
      }
    }
  }
  return {"witness sign == inseparability condition", static_cast<double>(mismatches), 0.0,
          mismatches == 0, std::to_string(compared) + " (nbar, n, tau) points"};
}

CheckResult check_witness_ppt() {
  const ThermalDistribution dist = thermal_distribution(1.0, kDefaultTailEps, 32);
  const std::vector<double> grid = tau_grid(25.0, 501);
  int compared = 0;
  int mismatches = 0;
  for (std::size_t j = 1; j < grid.size(); ++j) {
    const JcmState state = evolve(dist, JcmParams{1.0, grid[j]});
    for (long n = 0; n <= 30; ++n) {
      const double lambda = lambda_witness(n, grid[j]);
      if (std::abs(lambda) <= 1e-9) continue;
      ++compared;
      if (ppt_verdict(project_pair(state, n).rho).entangled() != (lambda > 0.0)) ++mismatches;
    }
  }
  return {"witness sign == PPT of projected pair", static_cast<double>(mismatches), 0.0,
          mismatches == 0, std::to_string(compared) + " points, nbar = 1, n <= 30"};
}

CheckResult check_concurrence_battery() {
  std::mt19937_64 rng(20240611ULL);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  constexpr int kStates = 10000;
  for (int k = 0; k < kStates; ++k) {
    std::array<double, 4> diag{};
    double total = 0.0;
    for (double& d : diag) total += (d = unit(rng) + 1e-3);
    for (double& d : diag) d /= total;
    const double magnitude = unit(rng) * std::sqrt(diag[1] * diag[2]);
    const Complex coherence = std::polar(magnitude, 2.0 * std::numbers::pi * unit(rng));
    Matrix m = Matrix::Zero(4, 4);
    for (int i = 0; i < 4; ++i) m(i, i) = diag[static_cast<std::size_t>(i)];
    m(1, 2) = coherence;
    m(2, 1) = std::conj(coherence);
    const double general = concurrence_general(DensityMatrix(m, SubsystemDims{2, 2}));
    worst = std::max(worst, std::abs(general - concurrence_xstate(diag, coherence)));
  }
  return {"X-state vs general concurrence (max |diff|)", worst, 1e-10, worst <= 1e-10,
          std::to_string(kStates) + " random X-states"};
}

CheckResult check_conservation() {
  constexpr double nbar = 10.0;
  const ThermalDistribution dist = thermal_distribution(nbar);
  const double thermal_entropy = (nbar + 1.0) * std::log2(nbar + 1.0) - nbar * std::log2(nbar);
  const double mass = dist.mass();
  double worst = 0.0;
  for (double tau : tau_grid(25.0, 50)) {
    const JcmState state = evolve(dist, JcmParams{1.0, tau});
    const AtomPopulations atom = reduced_atom(state);
    double field_mass = 0.0;
    for (double q : reduced_field(state)) field_mass += q;
    const CorrelationRecord rec = correlation_record(state);
    worst = std::max({worst, std::abs(atom.excited + atom.ground - mass),
                      std::abs(field_mass - mass), std::abs(rec.s_joint - thermal_entropy)});
  }
  return {"trace / joint-entropy conservation (max dev)", worst, 1e-8, worst <= 1e-8,
          "nbar = 10, 50 tau points in [0, 25]"};
}

}  // namespace

std::vector<CheckResult> run_validation(const ValidationOptions& options) {
  std::vector<CheckResult> checks;
  CheckResult verdicts;
  checks.push_back(check_oracle(options.perturb, verdicts));
  checks.push_back(std::move(verdicts));
  checks.push_back(check_witness_condition());
  checks.push_back(check_witness_ppt());
  checks.push_back(check_concurrence_battery());
  checks.push_back(check_conservation());
  return checks;
}

void print_report(std::ostream& out, const std::vector<CheckResult>& checks) {
  int failed = 0;
  for (const CheckResult& c : checks) {
    std::ostringstream measured;
    measured << std::scientific << std::setprecision(3) << c.measured << " (tol "
             << c.tolerance << ")";
    out << (c.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(46) << c.name
        << measured.str() << "  " << c.detail << '\n';
    if (!c.passed) ++failed;
  }
  out << (failed == 0 ? "all checks passed" : std::to_string(failed) + " check(s) failed") << '\n';
}

}  // namespace jcm
