#pragma once

#include "jcm/linalg.hpp"
#include "jcm/thermal.hpp"

namespace jcm {

/// JCM Hamiltonian on atom (x) span{|0>..|n_cut>}, index = atom * (n_cut+1) + n
/// with atom 0 = g, 1 = e. Only |e,n> <-> |g,n+1> couplings, g sqrt(n+1).
struct TruncatedHamiltonian {
  int n_cut = 0;
  double g = 1.0;
  Matrix matrix;

  int dim() const { return 2 * (n_cut + 1); }
};

TruncatedHamiltonian truncated_hamiltonian(int n_cut, double g = 1.0);

/// exp(-i H t) by scaling and squaring of a truncated Taylor series.
/// Throws NumericError if the series does not converge or the result fails
/// the 1e-10 unitarity check.
Matrix unitary_propagator(const Matrix& hamiltonian, double t);

/// U rho0 U^dagger with U = exp(-i H t).
DensityMatrix propagate(const TruncatedHamiltonian& h, const DensityMatrix& rho0, double t);

/// |e><e| (x) sum_{n <= N_max} P_n |n><n| on the oracle's truncated space.
/// Requires n_cut >= N_max + 2.
DensityMatrix excited_thermal_initial_state(const ThermalDistribution& dist, int n_cut);

/// 1/2 sum |eig(a - b)|.
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

/// The 4x4 block of rho on atom (x) span{|n>, |n+1>}, unnormalized, in the
/// basis {|g,n>, |g,n+1>, |e,n>, |e,n+1>}.
Matrix field_pair_block(const DensityMatrix& rho, int n);

}  // namespace jcm
