#include "jcm/witness.hpp"

#include <cmath>
#include <string>

#include "jcm/errors.hpp"

namespace jcm {

namespace {

struct PairEntries {
  std::array<double, 4> diag{};
  Complex coherence{};

  double weight() const { return diag[0] + diag[1] + diag[2] + diag[3]; }
};

// Unnormalized projection of rho_af onto atom (x) span{|n>, |n+1>}. Only
// blocks n-1, n, n+1 reach these levels: block n-1 through |g,n>, block n
// through |e,n> and |g,n+1> (with their coherence), block n+1 through |e,n+1>.
PairEntries pair_entries(const JcmState& state, long n) {
  const Block below = state.block(n - 1);
  const Block mid = state.block(n);
  const Block above = state.block(n + 1);
  PairEntries e;
  e.diag = {below.weight * below.s * below.s, mid.weight * mid.s * mid.s,
            mid.weight * mid.c * mid.c, above.weight * above.c * above.c};
  // <g,n+1| rho |e,n> = P_n (-i s) c
  e.coherence = Complex{0.0, -mid.weight * mid.s * mid.c};
  return e;
}

double pair_eof(const PairEntries& e) {
  const double w = e.weight();
  if (w < 1e-300) return 0.0;
  const std::array<double, 4> normalized{e.diag[0] / w, e.diag[1] / w, e.diag[2] / w, e.diag[3] / w};
  return eof_from_concurrence(concurrence_xstate(normalized, e.coherence / w));
}

void require_pair_in_range(const JcmState& state, long n, const char* who) {
  if (n < 0 || n + 1 > state.cutoff()) {
    throw DomainError(std::string(who) + ": pair {" + std::to_string(n) + ", " +
                      std::to_string(n + 1) + "} outside the truncation N_max = " +
                      std::to_string(state.cutoff()));
  }
}

}  // namespace

double witness_cos(long k, double tau) { return std::cos(rabi_angle(k, tau)); }
double witness_sin(long k, double tau) { return std::sin(rabi_angle(k, tau)); }

double lambda_witness(long n, double tau) {
  if (n < 0) throw DomainError("lambda_witness: n must be >= 0");
  const double cs = witness_cos(n, tau) * witness_sin(n, tau);
  const double cross = witness_cos(n + 1, tau) * witness_sin(n - 1, tau);
  return cs * cs - cross * cross;
}

bool inseparability_condition(const ThermalDistribution& dist, long n, double tau) {
  if (n < 1 || n + 1 > dist.cutoff()) {
    throw DomainError("inseparability_condition: need 1 <= n and n + 1 <= N_max = " +
                      std::to_string(dist.cutoff()) + ", got n = " + std::to_string(n));
  }
  const double lhs = dist.prob(n) * witness_cos(n, tau) * witness_sin(n, tau);
  const double cross = witness_cos(n + 1, tau) * witness_sin(n - 1, tau);
  return lhs * lhs > dist.prob(n - 1) * dist.prob(n + 1) * cross * cross;
}

double ProjectedState::min_pt_eigenvalue_unnormalized() const {
  // The partial transpose moves the coherence to the (0,3) corner; the
  // spectrum is {d1, d2} plus the eigenvalues of [[d0, x], [x*, d3]].
  const double mean = 0.5 * (diag[0] + diag[3]);
  const double half_gap = 0.5 * (diag[0] - diag[3]);
  const double corner = mean - std::hypot(half_gap, std::abs(coherence));
  return std::min({corner, diag[1], diag[2]});
}

double ProjectedState::concurrence() const {
  const std::array<double, 4> normalized{diag[0] / weight, diag[1] / weight, diag[2] / weight,
                                         diag[3] / weight};
  return concurrence_xstate(normalized, coherence / weight);
}

ProjectedState project_pair(const JcmState& state, long n) {
  require_pair_in_range(state, n, "project_pair");
  const PairEntries e = pair_entries(state, n);
  const double w = e.weight();
  if (!(w >= 1e-300)) {
    throw DegenerateOutcome("project_pair: outcome {" + std::to_string(n) + ", " +
                            std::to_string(n + 1) + "} has zero probability");
  }
  Matrix m = Matrix::Zero(4, 4);
  for (int k = 0; k < 4; ++k) m(k, k) = e.diag[static_cast<std::size_t>(k)] / w;
  m(1, 2) = e.coherence / w;
  m(2, 1) = std::conj(e.coherence) / w;
  return ProjectedState{n, w, e.diag, e.coherence, DensityMatrix(std::move(m), SubsystemDims{2, 2})};
}

PairingBound pairing_bound(const JcmState& state, Parity parity) {
  const std::vector<double> field = reduced_field(state);
  PairingBound result;
  long n = 0;
  if (parity == Parity::odd) {
    // The |0> outcome leaves the field pure: no entanglement, only weight.
    result.covered_weight += field[0];
    n = 1;
  }
  long last_level = n - 1;
  for (; n + 1 <= state.cutoff(); n += 2) {
    const PairEntries e = pair_entries(state, n);
    result.covered_weight += e.weight();
    result.bound += e.weight() * pair_eof(e);
    last_level = n + 1;
  }
  for (std::size_t k = static_cast<std::size_t>(last_level + 1); k < field.size(); ++k) {
    result.tail_weight += field[k];
  }
  return result;
}

double eof_lower_bound(const JcmState& state, Parity parity) {
  return pairing_bound(state, parity).bound;
}

CorrelationRecord correlation_record(const JcmState& state) {
  const std::vector<double> spectrum = joint_spectrum(state);
  double total = 0.0;
  for (double p : spectrum) total += p;
  // Entropies of the truncated state renormalized to unit trace.
  const auto entropy = [total](std::vector<double> values) {
    for (double& v : values) v /= total;
    return von_neumann_entropy(values);
  };

  CorrelationRecord rec;
  rec.tau = state.params.tau();
  const AtomPopulations atom = reduced_atom(state);
  rec.s_atom = entropy({atom.excited, atom.ground});
  rec.s_field = entropy(reduced_field(state));
  rec.s_joint = entropy(spectrum);
  rec.mutual_info = mutual_information(rec.s_atom, rec.s_field, rec.s_joint);

  const PairingBound even = pairing_bound(state, Parity::even);
  const PairingBound odd = pairing_bound(state, Parity::odd);
  rec.eof_bound_even = even.bound;
  rec.eof_bound_odd = odd.bound;
  rec.eof_bound = std::max(even.bound, odd.bound);
  rec.tail_weight = std::max(even.tail_weight, odd.tail_weight);
  return rec;
}

DensityMatrix atom_thermal_state(double lambda_e, long n, double tau) {
  if (!(lambda_e >= 0.0 && lambda_e <= 1.0)) {
    throw DomainError("atom_thermal_scenario: lambda_e must lie in [0, 1]");
  }
  if (n < 0) throw DomainError("atom_thermal_scenario: Fock number n must be >= 0");
  if (!std::isfinite(tau)) throw DomainError("atom_thermal_scenario: tau must be finite");

  // Local field levels: {n-1, n, n+1} -> {0, 1, 2}, or {0, 1} when n = 0.
  const int levels = n == 0 ? 2 : 3;
  const int offset = n == 0 ? 0 : 1;  // local index of |n>
  const auto index = [levels](int atom, int local) { return atom * levels + local; };
  constexpr int g = 0;
  constexpr int e = 1;

  // |e,n> -> cos(tau sqrt(n+1)) |e,n> - i sin(tau sqrt(n+1)) |g,n+1>
  Eigen::VectorXcd psi_e = Eigen::VectorXcd::Zero(2 * levels);
  const double theta_e = rabi_angle(n, tau);
  psi_e(index(e, offset)) = std::cos(theta_e);
  psi_e(index(g, offset + 1)) = Complex{0.0, -std::sin(theta_e)};

  // |g,n> -> cos(tau sqrt(n)) |g,n> - i sin(tau sqrt(n)) |e,n-1>; |g,0> is stationary.
  Eigen::VectorXcd psi_g = Eigen::VectorXcd::Zero(2 * levels);
  const double theta_g = rabi_angle(n - 1, tau);
  psi_g(index(g, offset)) = std::cos(theta_g);
  if (n > 0) psi_g(index(e, offset - 1)) = Complex{0.0, -std::sin(theta_g)};

  Matrix rho = lambda_e * (psi_e * psi_e.adjoint()) + (1.0 - lambda_e) * (psi_g * psi_g.adjoint());
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityMatrix(std::move(rho), SubsystemDims{2, levels});
}

EntanglementVerdict atom_thermal_scenario(double lambda_e, long n, double tau) {
  return ppt_verdict(atom_thermal_state(lambda_e, n, tau));
}

}  // namespace jcm
