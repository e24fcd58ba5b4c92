#include <cstddef>
#include <exception>

#include "jcm/errors.hpp"
#include "jcm/scan.hpp"

namespace jcm::parallel {

namespace {

// Runs body(i) for i in [0, count) across OpenMP threads and rethrows the
// first exception on the calling thread.
template <class Body>
void parallel_for(std::ptrdiff_t count, Body&& body, bool dynamic = false) {
  std::exception_ptr failure;
  if (dynamic) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      try {
        body(i);
      } catch (...) {
#pragma omp critical(jcm_scan_failure)
        if (!failure) failure = std::current_exception();
      }
    }
  } else {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      try {
        body(i);
      } catch (...) {
#pragma omp critical(jcm_scan_failure)
        if (!failure) failure = std::current_exception();
      }
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

WitnessScan witness_scan(std::span<const long> n_values, std::span<const double> taus) {
  WitnessScan scan;
  scan.n_values.assign(n_values.begin(), n_values.end());
  scan.tau_values.assign(taus.begin(), taus.end());
  const std::size_t cols = taus.size();
  scan.lambda.resize(n_values.size() * cols);
  scan.entangled.resize(scan.lambda.size());
  parallel_for(static_cast<std::ptrdiff_t>(scan.lambda.size()), [&](std::ptrdiff_t k) {
    const auto idx = static_cast<std::size_t>(k);
    const double value = lambda_witness(n_values[idx / cols], taus[idx % cols]);
    scan.lambda[idx] = value;
    scan.entangled[idx] = value > kWitnessTol;
  });
  return scan;
}

std::vector<CorrelationRecord> correlation_scan(const ThermalDistribution& dist, double g,
                                                std::span<const double> taus) {
  std::vector<CorrelationRecord> records(taus.size());
  parallel_for(static_cast<std::ptrdiff_t>(taus.size()), [&](std::ptrdiff_t i) {
    const auto idx = static_cast<std::size_t>(i);
    records[idx] = detail::correlation_point(dist, g, taus[idx]);
  });
  return records;
}

std::vector<EntanglementVerdict> ppt23_scan(double lambda_e, long n, std::span<const double> taus) {
  std::vector<EntanglementVerdict> verdicts(taus.size());
  parallel_for(static_cast<std::ptrdiff_t>(taus.size()), [&](std::ptrdiff_t i) {
    const auto idx = static_cast<std::size_t>(i);
    verdicts[idx] = atom_thermal_scenario(lambda_e, n, taus[idx]);
  });
  return verdicts;
}

std::vector<OraclePoint> oracle_scan(const ThermalDistribution& dist, int n_cut, double g,
                                     std::span<const double> taus, double perturb) {
  std::vector<OraclePoint> points(taus.size());
  parallel_for(
      static_cast<std::ptrdiff_t>(taus.size()),
      [&](std::ptrdiff_t i) {
        const auto idx = static_cast<std::size_t>(i);
        points[idx] = detail::oracle_point(dist, n_cut, g, taus[idx], perturb);
      },
      /*dynamic=*/true);
  return points;
}

}  // namespace jcm::parallel
