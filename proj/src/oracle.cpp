#include "jcm/oracle.hpp"

#include <array>
#include <cmath>
#include <string>

#include "jcm/errors.hpp"

namespace jcm {

TruncatedHamiltonian truncated_hamiltonian(int n_cut, double g) {
  if (n_cut < 1) throw DomainError("truncated_hamiltonian: n_cut must be >= 1");
  if (!(g > 0.0)) throw DomainError("truncated_hamiltonian: g must be > 0");
  TruncatedHamiltonian h;
  h.n_cut = n_cut;
  h.g = g;
  const int levels = n_cut + 1;
  h.matrix = Matrix::Zero(2 * levels, 2 * levels);
  for (int n = 0; n < n_cut; ++n) {
    const int e_n = levels + n;  // |e,n>
    const int g_n1 = n + 1;      // |g,n+1>
    const double coupling = g * std::sqrt(static_cast<double>(n + 1));
    h.matrix(e_n, g_n1) = coupling;
    h.matrix(g_n1, e_n) = coupling;
  }
  return h;
}

Matrix unitary_propagator(const Matrix& hamiltonian, double t) {
  const Eigen::Index dim = hamiltonian.rows();
  const Matrix generator = Complex{0.0, -t} * hamiltonian;
  const double norm1 = generator.cwiseAbs().colwise().sum().maxCoeff();

  int squarings = 0;
  if (norm1 > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm1 / 0.5)));
  const Matrix scaled = generator / std::ldexp(1.0, squarings);

  Matrix sum = Matrix::Identity(dim, dim);
  Matrix term = Matrix::Identity(dim, dim);
  bool converged = false;
  for (int k = 1; k <= 40; ++k) {
    term = (term * scaled) / static_cast<double>(k);
    sum += term;
    if (term.norm() <= 1e-18 * sum.norm()) {
      converged = true;
      break;
    }
  }
  if (!converged) throw NumericError("unitary_propagator: Taylor series did not converge");

  for (int i = 0; i < squarings; ++i) sum = (sum * sum).eval();

  const double defect =
      (sum.adjoint() * sum - Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff();
  if (defect > 1e-10) {
    throw NumericError("unitary_propagator: unitarity defect " + std::to_string(defect));
  }
  return sum;
}

DensityMatrix propagate(const TruncatedHamiltonian& h, const DensityMatrix& rho0, double t) {
  if (rho0.dim() != h.dim()) throw DomainError("propagate: state and Hamiltonian dimensions differ");
  if (!(t >= 0.0)) throw DomainError("propagate: t must be >= 0");
  if (t == 0.0) return rho0;
  const Matrix u = unitary_propagator(h.matrix, t);
  Matrix rho = u * rho0.matrix() * u.adjoint();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityMatrix(std::move(rho), rho0.dims());
}

DensityMatrix excited_thermal_initial_state(const ThermalDistribution& dist, int n_cut) {
  if (n_cut < dist.cutoff() + 2) {
    throw DomainError("excited_thermal_initial_state: n_cut must be >= N_max + 2 = " +
                      std::to_string(dist.cutoff() + 2));
  }
  const int levels = n_cut + 1;
  Matrix rho = Matrix::Zero(2 * levels, 2 * levels);
  for (int n = 0; n <= dist.cutoff(); ++n) rho(levels + n, levels + n) = dist.prob(n);
  return DensityMatrix(std::move(rho), SubsystemDims{2, levels});
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) throw DomainError("trace_distance: dimension mismatch");
  double sum = 0.0;
  for (double lambda : hermitian_eigenvalues(a.matrix() - b.matrix())) sum += std::abs(lambda);
  return 0.5 * sum;
}

Matrix field_pair_block(const DensityMatrix& rho, int n) {
  if (!rho.dims() || rho.dims()->a != 2) {
    throw DomainError("field_pair_block: expected an atom (x) field state");
  }
  const int levels = rho.dims()->b;
  if (n < 0 || n + 1 >= levels) throw DomainError("field_pair_block: pair outside the field space");
  const std::array<int, 4> idx{n, n + 1, levels + n, levels + n + 1};
  Matrix block(4, 4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) block(i, j) = rho.matrix()(idx[i], idx[j]);
  }
  return block;
}

}  // namespace jcm
