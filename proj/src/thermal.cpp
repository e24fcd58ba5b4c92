#include "jcm/thermal.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "jcm/errors.hpp"

namespace jcm {

double ThermalDistribution::mass() const {
  // Kahan summation; at nbar ~ 1e3 the cutoff runs to ~3e4 terms.
  double sum = 0.0;
  double carry = 0.0;
  for (double p : probs) {
    const double y = p - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  return sum;
}

ThermalDistribution thermal_distribution(double nbar, double tail_eps, int min_cutoff) {
  if (!std::isfinite(nbar) || nbar < 0.0) {
    throw DomainError("thermal_distribution: nbar must be finite and >= 0, got " +
                      std::to_string(nbar));
  }
  if (!(tail_eps > 0.0 && tail_eps < 1.0)) {
    throw DomainError("thermal_distribution: tail_eps must lie in (0, 1)");
  }
  if (min_cutoff < 2) min_cutoff = 2;

  const double ratio = nbar / (1.0 + nbar);
  ThermalDistribution dist;
  dist.nbar = nbar;
  dist.tail_eps = tail_eps;

  // The tail beyond N is ratio^(N+1); track it alongside P_N so the stopping
  // rule does not depend on round-off in a running sum.
  double p = 1.0 / (1.0 + nbar);
  double tail = ratio;
  dist.probs.push_back(p);
  while (tail > tail_eps) {
    p *= ratio;
    tail *= ratio;
    dist.probs.push_back(p);
    if (dist.probs.size() > static_cast<std::size_t>(std::numeric_limits<int>::max() / 2)) {
      throw DomainError("thermal_distribution: cutoff too large for nbar = " +
                        std::to_string(nbar));
    }
  }
  while (dist.cutoff() < min_cutoff) {
    p *= ratio;
    dist.probs.push_back(p);
  }
  return dist;
}

double nbar_from_temperature(double beta_hbar_omega) {
  if (!(beta_hbar_omega > 0.0)) {
    throw DomainError("nbar_from_temperature: beta*hbar*omega must be > 0");
  }
  return 1.0 / std::expm1(beta_hbar_omega);
}

}  // namespace jcm
