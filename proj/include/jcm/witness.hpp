#pragma once

#include <array>

#include "jcm/dynamics.hpp"
#include "jcm/measures.hpp"
#include "jcm/thermal.hpp"

namespace jcm {

/// Lambda_n > kWitnessTol is reported as entangled.
inline constexpr double kWitnessTol = 1e-12;

/// C_k = cos(tau sqrt(k+1)), with C_{-1} = 1.
double witness_cos(long k, double tau);
/// S_k = sin(tau sqrt(k+1)), with S_{-1} = 0.
double witness_sin(long k, double tau);

/// Temperature-independent witness (C_n S_n)^2 - (C_{n+1} S_{n-1})^2.
double lambda_witness(long n, double tau);

/// (P_n C_n S_n)^2 > P_{n-1} P_{n+1} (C_{n+1} S_{n-1})^2 for the given
/// distribution. Requires 1 <= n and n + 1 <= N_max (DomainError otherwise).
bool inseparability_condition(const ThermalDistribution& dist, long n, double tau);

/// Outcome of projecting the field onto span{|n>, |n+1>}.
///
/// rho is normalized, in the basis {|g,n>, |g,n+1>, |e,n>, |e,n+1>};
/// `diag` and `coherence` are the unnormalized entries (coherence is
/// rho(1,2)), `weight` the outcome probability.
struct ProjectedState {
  long n = 0;
  double weight = 0.0;
  std::array<double, 4> diag{};
  Complex coherence{};
  DensityMatrix rho;

  /// Smallest eigenvalue of the unnormalized partial transpose, in closed form.
  double min_pt_eigenvalue_unnormalized() const;
  double concurrence() const;
};

/// Throws DomainError unless 0 <= n and n + 1 <= N_max, and DegenerateOutcome
/// when the outcome probability is below 1e-300.
ProjectedState project_pair(const JcmState& state, long n);

enum class Parity { even, odd };

/// Result of one complete two-level measurement on the field.
struct PairingBound {
  double bound = 0.0;           // sum over outcomes of weight * EoF (bits)
  double covered_weight = 0.0;  // weights of the pairs and the |0> singleton
  double tail_weight = 0.0;     // population of levels above the last pair
};

/// Pairs {0,1},{2,3},... (even) or {0},{1,2},{3,4},... (odd); since the
/// pairing is a complete local measurement on the field, the weighted EoF
/// average bounds the entanglement of rho_af from below.
PairingBound pairing_bound(const JcmState& state, Parity parity);

/// pairing_bound(...).bound.
double eof_lower_bound(const JcmState& state, Parity parity);

struct CorrelationRecord {
  double tau = 0.0;
  double mutual_info = 0.0;
  double eof_bound_even = 0.0;
  double eof_bound_odd = 0.0;
  double eof_bound = 0.0;
  double s_atom = 0.0;
  double s_field = 0.0;
  double s_joint = 0.0;
  double tail_weight = 0.0;  // largest weight ignored by either pairing
};

CorrelationRecord correlation_record(const JcmState& state);

/// Thermal atom lambda|e><e| + (1-lambda)|g><g|, field in Fock state |n>,
/// evolved to tau; exact PPT verdict on atom (x) span{|n-1>,|n>,|n+1>}
/// (atom (x) span{|0>,|1>} when n = 0).
EntanglementVerdict atom_thermal_scenario(double lambda_e, long n, double tau);

/// The state behind atom_thermal_scenario.
DensityMatrix atom_thermal_state(double lambda_e, long n, double tau);

}  // namespace jcm
