#pragma once

// Grid kernels. Every kernel exists twice with the same signature:
// jcm::serial is the plain-loop reference, jcm::parallel distributes the
// outer loop with OpenMP. Each grid point is a pure function of its inputs,
// so both produce bit-identical results in the same order.

#include <span>
#include <vector>

#include "jcm/measures.hpp"
#include "jcm/thermal.hpp"
#include "jcm/witness.hpp"

namespace jcm {

/// tau_max * i / (steps - 1), i = 0..steps-1 (both endpoints included).
/// Throws DomainError unless steps >= 2 and tau_max > 0.
std::vector<double> tau_grid(double tau_max, int steps);

/// Lambda_n over an n x tau grid, row-major in n.
struct WitnessScan {
  std::vector<long> n_values;
  std::vector<double> tau_values;
  std::vector<double> lambda;
  std::vector<unsigned char> entangled;  // lambda > kWitnessTol

  double at(std::size_t i_n, std::size_t i_tau) const {
    return lambda[i_n * tau_values.size() + i_tau];
  }
  bool entangled_at(std::size_t i_n, std::size_t i_tau) const {
    return entangled[i_n * tau_values.size() + i_tau] != 0;
  }
};

/// Comparison of the analytic block solution against the dense propagator
/// at a single time.
struct OraclePoint {
  double tau = 0.0;
  double trace_distance = 0.0;
  int verdicts_checked = 0;
  int verdicts_skipped = 0;  // |min PT eigenvalue| too close to zero to decide
  int verdict_mismatches = 0;
};

namespace serial {

WitnessScan witness_scan(std::span<const long> n_values, std::span<const double> taus);
std::vector<CorrelationRecord> correlation_scan(const ThermalDistribution& dist, double g,
                                                std::span<const double> taus);
std::vector<EntanglementVerdict> ppt23_scan(double lambda_e, long n, std::span<const double> taus);
std::vector<OraclePoint> oracle_scan(const ThermalDistribution& dist, int n_cut, double g,
                                     std::span<const double> taus, double perturb = 0.0);

}  // namespace serial

namespace parallel {

WitnessScan witness_scan(std::span<const long> n_values, std::span<const double> taus);
std::vector<CorrelationRecord> correlation_scan(const ThermalDistribution& dist, double g,
                                                std::span<const double> taus);
std::vector<EntanglementVerdict> ppt23_scan(double lambda_e, long n, std::span<const double> taus);
std::vector<OraclePoint> oracle_scan(const ThermalDistribution& dist, int n_cut, double g,
                                     std::span<const double> taus, double perturb = 0.0);

}  // namespace parallel

/// Single-point kernels shared by both implementations.
namespace detail {

CorrelationRecord correlation_point(const ThermalDistribution& dist, double g, double tau);
OraclePoint oracle_point(const ThermalDistribution& dist, int n_cut, double g, double tau,
                         double perturb);

}  // namespace detail

}  // namespace jcm
