#pragma once

#include <vector>

namespace jcm {

/// Photon-number distribution of a thermal single-mode field, truncated where
/// the remaining tail mass drops below `tail_eps`.
///
/// probs[n] = (1/(1+nbar)) * (nbar/(1+nbar))^n for 0 <= n <= cutoff();
/// the probability of any n outside that range is taken to be zero.
struct ThermalDistribution {
  double nbar = 0.0;
  double tail_eps = 1e-12;
  std::vector<double> probs;

  int cutoff() const { return static_cast<int>(probs.size()) - 1; }

  /// P_n with P_n = 0 for n < 0 and n > cutoff().
  double prob(long n) const {
    if (n < 0 || n > cutoff()) return 0.0;
    return probs[static_cast<std::size_t>(n)];
  }

  /// Compensated sum of the retained probabilities.
  double mass() const;
};

inline constexpr double kDefaultTailEps = 1e-12;

/// Builds the truncated thermal distribution. The cutoff N_max is the smallest
/// N with cumulative mass >= 1 - tail_eps, raised to at least `min_cutoff`
/// (which itself is at least 2, so P_{n-1}, P_n, P_{n+1} exist for n = 1).
///
/// Throws DomainError for negative / non-finite nbar or tail_eps outside (0, 1).
ThermalDistribution thermal_distribution(double nbar, double tail_eps = kDefaultTailEps,
                                         int min_cutoff = 2);

/// <n> = 1 / (exp(beta*hbar*omega) - 1). The argument must be positive.
double nbar_from_temperature(double beta_hbar_omega);

}  // namespace jcm
