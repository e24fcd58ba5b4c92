#include "jcm/dynamics.hpp"

#include <cmath>
#include <string>

#include "jcm/errors.hpp"

namespace jcm {

double rabi_angle(long n, double tau) {
  return tau * std::sqrt(static_cast<double>(n + 1));
}

Block JcmState::block(long n) const {
  if (n < 0 || n > cutoff()) return Block{};
  return blocks[static_cast<std::size_t>(n)];
}

JcmState evolve(const ThermalDistribution& dist, JcmParams params) {
  if (!std::isfinite(params.g) || params.g <= 0.0) {
    throw DomainError("evolve: coupling g must be finite and > 0");
  }
  if (!std::isfinite(params.t) || params.t < 0.0) {
    throw DomainError("evolve: time t must be finite and >= 0");
  }
  JcmState state;
  state.params = params;
  state.nbar = dist.nbar;
  state.tail_eps = dist.tail_eps;
  state.blocks.reserve(dist.probs.size());
  const double tau = params.tau();
  for (std::size_t n = 0; n < dist.probs.size(); ++n) {
    const double theta = rabi_angle(static_cast<long>(n), tau);
    state.blocks.push_back({dist.probs[n], std::cos(theta), std::sin(theta)});
  }
  return state;
}

AtomPopulations reduced_atom(const JcmState& state) {
  AtomPopulations pops;
  for (const Block& b : state.blocks) {
    pops.excited += b.weight * b.c * b.c;
    pops.ground += b.weight * b.s * b.s;
  }
  return pops;
}

std::vector<double> reduced_field(const JcmState& state) {
  const std::size_t levels = state.blocks.size() + 1;
  std::vector<double> q(levels, 0.0);
  for (std::size_t n = 0; n < state.blocks.size(); ++n) {
    const Block& b = state.blocks[n];
    q[n] += b.weight * b.c * b.c;
    q[n + 1] += b.weight * b.s * b.s;
  }
  return q;
}

std::vector<double> joint_spectrum(const JcmState& state) {
  std::vector<double> spectrum;
  spectrum.reserve(state.blocks.size());
  for (const Block& b : state.blocks) spectrum.push_back(b.weight);
  return spectrum;
}

DensityMatrix assemble_density_matrix(const JcmState& state, int field_levels) {
  if (field_levels < state.cutoff() + 2) {
    throw DomainError("assemble_density_matrix: need at least N_max + 2 = " +
                      std::to_string(state.cutoff() + 2) + " field levels");
  }
  const int dim = 2 * field_levels;
  Matrix rho = Matrix::Zero(dim, dim);
  const auto g_index = [](long n) { return static_cast<Eigen::Index>(n); };
  const auto e_index = [field_levels](long n) { return static_cast<Eigen::Index>(field_levels + n); };
  for (long n = 0; n <= state.cutoff(); ++n) {
    const Block& b = state.blocks[static_cast<std::size_t>(n)];
    // |psi_n> = c |e,n> - i s |g,n+1>
    const Complex amp_e{b.c, 0.0};
    const Complex amp_g{0.0, -b.s};
    const Eigen::Index ie = e_index(n);
    const Eigen::Index ig = g_index(n + 1);
    rho(ie, ie) += b.weight * std::norm(amp_e);
    rho(ig, ig) += b.weight * std::norm(amp_g);
    rho(ie, ig) += b.weight * amp_e * std::conj(amp_g);
    rho(ig, ie) += b.weight * amp_g * std::conj(amp_e);
  }
  return DensityMatrix(std::move(rho), SubsystemDims{2, field_levels});
}

}  // namespace jcm
