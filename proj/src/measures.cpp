#include "jcm/measures.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include <Eigen/SVD>

#include "jcm/errors.hpp"

namespace jcm {

namespace {

constexpr double kSpectrumClamp = 1e-10;

double xlog2x(double p) { return p > 0.0 ? p * std::log2(p) : 0.0; }

}  // namespace

double von_neumann_entropy(std::span<const double> spectrum) {
  double total = 0.0;
  double entropy = 0.0;
  for (double lambda : spectrum) {
    if (lambda < -kSpectrumClamp) {
      throw DomainError("von_neumann_entropy: eigenvalue " + std::to_string(lambda) +
                        " is negative beyond round-off");
    }
    const double p = std::max(lambda, 0.0);
    total += p;
    entropy -= xlog2x(p);
  }
  if (std::abs(total - 1.0) > 1e-6) {
    throw DomainError("von_neumann_entropy: spectrum sums to " + std::to_string(total));
  }
  return entropy;
}

double binary_entropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log1p(-p) / std::log(2.0);
}

double mutual_information(double s_atom, double s_field, double s_joint) {
  const double info = s_atom + s_field - s_joint;
  if (info < -1e-6) {
    throw NumericError("mutual_information: negative result " + std::to_string(info) +
                       " (inconsistent entropies)");
  }
  return std::max(info, 0.0);
}

Matrix partial_transpose(const DensityMatrix& rho) {
  if (!rho.dims()) throw DomainError("partial_transpose: subsystem dims not set");
  const Eigen::Index da = rho.dims()->a;
  const Eigen::Index db = rho.dims()->b;
  const Matrix& m = rho.matrix();
  Matrix out(m.rows(), m.cols());
  for (Eigen::Index a = 0; a < da; ++a) {
    for (Eigen::Index b = 0; b < db; ++b) {
      for (Eigen::Index a2 = 0; a2 < da; ++a2) {
        for (Eigen::Index b2 = 0; b2 < db; ++b2) {
          out(a * db + b, a2 * db + b2) = m(a * db + b2, a2 * db + b);
        }
      }
    }
  }
  return out;
}

EntanglementVerdict ppt_verdict(const DensityMatrix& rho) {
  if (!rho.dims()) throw DomainError("ppt_verdict: subsystem dims not set");
  const auto spectrum = hermitian_eigenvalues(partial_transpose(rho));
  EntanglementVerdict verdict;
  verdict.min_pt_eigenvalue = spectrum.front();
  verdict.is_ppt = verdict.min_pt_eigenvalue >= -kPptTol;
  for (double lambda : spectrum) {
    if (lambda < 0.0) verdict.negativity -= lambda;
  }
  const SubsystemDims d = *rho.dims();
  verdict.ppt_sufficient = d.a == 2 && (d.b == 2 || d.b == 3);
  if (d.a == 2 && d.b == 2 && rho.trace() > 0.0) {
    const double c = concurrence_general(rho.normalized());
    verdict.concurrence = c;
    verdict.eof = eof_from_concurrence(c);
  }
  return verdict;
}

double concurrence_general(const DensityMatrix& rho) {
  if (rho.dim() != 4) throw DomainError("concurrence_general: expected a 4x4 density matrix");
  const EigenSystem es = hermitian_eigensystem(rho.matrix());
  if (es.values.front() < -kPptTol) {
    throw DomainError("concurrence_general: state is not positive semidefinite");
  }
  // rho = W W^dagger with W = V sqrt(diag(mu)); the Wootters lambdas are the
  // singular values of W^T (sigma_y (x) sigma_y) W.
  Matrix w = es.vectors;
  for (int k = 0; k < 4; ++k) w.col(k) *= std::sqrt(std::max(es.values[static_cast<std::size_t>(k)], 0.0));

  Matrix flip = Matrix::Zero(4, 4);
  flip(0, 3) = -1.0;
  flip(1, 2) = 1.0;
  flip(2, 1) = 1.0;
  flip(3, 0) = -1.0;
  const Matrix tau = w.transpose() * flip * w;
  const Eigen::JacobiSVD<Matrix> svd(tau);
  std::vector<double> lambdas(svd.singularValues().data(), svd.singularValues().data() + 4);
  std::sort(lambdas.begin(), lambdas.end(), std::greater<>());
  return std::max(0.0, lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]);
}

double concurrence_xstate(const std::array<double, 4>& diag, Complex coherence) {
  return 2.0 * std::max(0.0, std::abs(coherence) - std::sqrt(std::max(diag[0] * diag[3], 0.0)));
}

double eof_from_concurrence(double c) {
  c = std::clamp(c, 0.0, 1.0);
  // q = (1 - sqrt(1 - c^2)) / 2 without cancellation for small c.
  const double root = std::sqrt((1.0 - c) * (1.0 + c));
  const double q = c * c / (2.0 * (1.0 + root));
  return binary_entropy(q);
}

DemoResult qubit_qubit_demo() {
  // |q1 q2>, index 2*q1 + q2. Qubit 1 pure |0>, qubit 2 maximally mixed.
  Matrix input = Matrix::Zero(4, 4);
  input(0, 0) = 0.5;
  input(1, 1) = 0.5;

  // |00> -> |00>, |01> -> |psi+>, completed to a unitary by
  // |10> -> |psi->, |11> -> |11>.
  const double r = 1.0 / std::sqrt(2.0);
  Matrix u = Matrix::Zero(4, 4);
  u(0, 0) = 1.0;
  u(1, 1) = r;
  u(2, 1) = r;
  u(1, 2) = r;
  u(2, 2) = -r;
  u(3, 3) = 1.0;

  Matrix out = u * input * u.adjoint();
  DensityMatrix state(0.5 * (out + out.adjoint()), SubsystemDims{2, 2});
  EntanglementVerdict verdict = ppt_verdict(state);
  return {std::move(state), verdict};
}

}  // namespace jcm
