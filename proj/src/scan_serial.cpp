#include <cmath>
#include <optional>
#include <random>

#include "jcm/dynamics.hpp"
#include "jcm/errors.hpp"
#include "jcm/oracle.hpp"
#include "jcm/scan.hpp"

namespace jcm {

std::vector<double> tau_grid(double tau_max, int steps) {
  if (steps < 2) throw DomainError("tau_grid: steps must be >= 2");
  if (!(tau_max > 0.0) || !std::isfinite(tau_max)) throw DomainError("tau_grid: tau_max must be > 0");
  std::vector<double> taus(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) taus[static_cast<std::size_t>(i)] = tau_max * i / (steps - 1);
  return taus;
}

namespace detail {

CorrelationRecord correlation_point(const ThermalDistribution& dist, double g, double tau) {
  return correlation_record(evolve(dist, JcmParams{g, tau / g}));
}

OraclePoint oracle_point(const ThermalDistribution& dist, int n_cut, double g, double tau,
                         double perturb) {
  JcmState state = evolve(dist, JcmParams{g, tau / g});
  if (perturb != 0.0) {
    std::mt19937_64 rng(0x5eedULL);
    std::uniform_real_distribution<double> noise(-1.0, 1.0);
    for (Block& b : state.blocks) {
      b.c += perturb * noise(rng);
      b.s += perturb * noise(rng);
    }
  }
  const DensityMatrix analytic = assemble_density_matrix(state, n_cut + 1);
  const TruncatedHamiltonian h = truncated_hamiltonian(n_cut, g);
  const DensityMatrix numeric = propagate(h, excited_thermal_initial_state(dist, n_cut), tau / g);

  OraclePoint point;
  point.tau = tau;
  point.trace_distance = trace_distance(analytic, numeric);

  for (long n = 0; n + 1 <= state.cutoff(); ++n) {
    std::optional<ProjectedState> projected;
    try {
      projected.emplace(project_pair(state, n));
    } catch (const DegenerateOutcome&) {
      continue;
    }
    const double min_unnormalized = projected->min_pt_eigenvalue_unnormalized();
    if (std::abs(min_unnormalized) <= 1e-11 ||
        std::abs(min_unnormalized) <= 1e-9 * projected->weight) {
      ++point.verdicts_skipped;
      continue;
    }
    const Matrix block = field_pair_block(numeric, static_cast<int>(n));
    const double block_trace = block.trace().real();
    if (!(block_trace > 0.0)) {
      ++point.verdict_mismatches;
      continue;
    }
    Matrix normalized = block / block_trace;
    normalized = 0.5 * (normalized + normalized.adjoint()).eval();
    const bool oracle_entangled =
        ppt_verdict(DensityMatrix(std::move(normalized), SubsystemDims{2, 2})).entangled();
    const bool analytic_entangled = ppt_verdict(projected->rho).entangled();
    ++point.verdicts_checked;
    if (oracle_entangled != analytic_entangled) ++point.verdict_mismatches;
  }
  return point;
}

}  // namespace detail

namespace serial {

WitnessScan witness_scan(std::span<const long> n_values, std::span<const double> taus) {
  WitnessScan scan;
  scan.n_values.assign(n_values.begin(), n_values.end());
  scan.tau_values.assign(taus.begin(), taus.end());
  scan.lambda.resize(n_values.size() * taus.size());
  scan.entangled.resize(scan.lambda.size());
  for (std::size_t i = 0; i < n_values.size(); ++i) {
    for (std::size_t j = 0; j < taus.size(); ++j) {
      const double value = lambda_witness(n_values[i], taus[j]);
      scan.lambda[i * taus.size() + j] = value;
      scan.entangled[i * taus.size() + j] = value > kWitnessTol;
    }
  }
  return scan;
}

std::vector<CorrelationRecord> correlation_scan(const ThermalDistribution& dist, double g,
                                                std::span<const double> taus) {
  std::vector<CorrelationRecord> records;
  records.reserve(taus.size());
  for (double tau : taus) records.push_back(detail::correlation_point(dist, g, tau));
  return records;
}

std::vector<EntanglementVerdict> ppt23_scan(double lambda_e, long n, std::span<const double> taus) {
  std::vector<EntanglementVerdict> verdicts;
  verdicts.reserve(taus.size());
  for (double tau : taus) verdicts.push_back(atom_thermal_scenario(lambda_e, n, tau));
  return verdicts;
}

std::vector<OraclePoint> oracle_scan(const ThermalDistribution& dist, int n_cut, double g,
                                     std::span<const double> taus, double perturb) {
  std::vector<OraclePoint> points;
  points.reserve(taus.size());
  for (double tau : taus) points.push_back(detail::oracle_point(dist, n_cut, g, tau, perturb));
  return points;
}

}  // namespace serial
}  // namespace jcm
