#pragma once

#include <vector>

#include "jcm/linalg.hpp"
#include "jcm/thermal.hpp"

namespace jcm {

/// Resonant Jaynes-Cummings coupling and elapsed time. All scans use the
/// dimensionless time tau = g * t.
struct JcmParams {
  double g = 1.0;
  double t = 0.0;

  double tau() const { return g * t; }
};

/// Rabi angle of the excitation block {|e,n>, |g,n+1>}: Omega_n t / 2 = tau * sqrt(n+1).
double rabi_angle(long n, double tau);

/// One excitation block: weight P_n and the pure state
/// c |e,n> - i s |g,n+1>.
struct Block {
  double weight = 0.0;
  double c = 1.0;
  double s = 0.0;
};

/// rho_af(t) = sum_n P_n |psi_n><psi_n|, stored block by block.
struct JcmState {
  JcmParams params;
  double nbar = 0.0;
  double tail_eps = 0.0;
  std::vector<Block> blocks;  // blocks[n], 0 <= n <= N_max

  int cutoff() const { return static_cast<int>(blocks.size()) - 1; }

  /// Block n, or an empty block (weight 0, c = 1, s = 0) outside [0, N_max].
  Block block(long n) const;
};

/// Excited atom, thermal field, evolved for time params.t. Throws DomainError
/// for g <= 0, t < 0 or non-finite parameters.
JcmState evolve(const ThermalDistribution& dist, JcmParams params);

struct AtomPopulations {
  double excited = 0.0;
  double ground = 0.0;
};

/// Diagonal of the reduced atom state; the atom never acquires coherence
/// from this initial condition.
AtomPopulations reduced_atom(const JcmState& state);

/// Fock-basis diagonal of the reduced field state, levels 0..N_max+1.
std::vector<double> reduced_field(const JcmState& state);

/// Spectrum of rho_af: each block is pure and blocks are orthogonal, so this
/// is just the thermal weights, for every t.
std::vector<double> joint_spectrum(const JcmState& state);

/// Dense rho_af on atom (x) span{|0>..|field_levels-1>}, atom index 0 = g,
/// 1 = e. Used only for validation against the numeric propagator. Throws
/// DomainError if field_levels < N_max + 2 (the state would not fit).
DensityMatrix assemble_density_matrix(const JcmState& state, int field_levels);

}  // namespace jcm
