#include "jcm/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "jcm/errors.hpp"

namespace jcm {

namespace {

constexpr double kHermitianTol = 1e-10;
constexpr double kOffDiagonalTol = 1e-14;
constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const Matrix& a) {
  double sum = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i != j) sum += std::norm(a(i, j));
    }
  }
  return std::sqrt(sum);
}

// Cyclic Jacobi for complex Hermitian matrices. Each rotation first removes
// the phase of a(p,q), then applies the real symmetric Jacobi rotation
// J = [[c, s], [-s, c]] to the now-real 2x2 block. The combined unitary is
//   J_pp = c, J_pq = s, J_qp = -s e^{-i phi}, J_qq = c e^{-i phi}
// and a <- J^dagger a J.
EigenSystem jacobi(const Matrix& input, bool want_vectors) {
  if (input.rows() != input.cols()) {
    throw DomainError("hermitian eigensolver: matrix is not square");
  }
  const Eigen::Index n = input.rows();
  const double scale = input.norm();
  if (hermiticity_defect(input) > kHermitianTol * std::max(1.0, scale)) {
    throw DomainError("hermitian eigensolver: matrix is not Hermitian");
  }

  Matrix a = 0.5 * (input + input.adjoint());
  Matrix v;
  if (want_vectors) v = Matrix::Identity(n, n);

  bool converged = n <= 1 || scale == 0.0;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    if (off_diagonal_norm(a) <= kOffDiagonalTol * scale) {
      converged = true;
      break;
    }
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double mag = std::abs(a(p, q));
        if (mag == 0.0) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        // Negligible against both diagonal entries: drop it.
        if (sweep > 3 && std::abs(app) + 100.0 * mag == std::abs(app) &&
            std::abs(aqq) + 100.0 * mag == std::abs(aqq)) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          continue;
        }
        const Complex phase = a(p, q) / mag;  // e^{i phi}
        const Complex phase_conj = std::conj(phase);
        const double theta = (aqq - app) / (2.0 * mag);
        double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        // Columns: a <- a J.
        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = c * akp - s * phase_conj * akq;
          a(k, q) = s * akp + c * phase_conj * akq;
        }
        // Rows: a <- J^dagger a.
        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = c * apk - s * phase * aqk;
          a(q, k) = s * apk + c * phase * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = app - t * mag;
        a(q, q) = aqq + t * mag;

        if (want_vectors) {
          for (Eigen::Index k = 0; k < n; ++k) {
            const Complex vkp = v(k, p);
            const Complex vkq = v(k, q);
            v(k, p) = c * vkp - s * phase_conj * vkq;
            v(k, q) = s * vkp + c * phase_conj * vkq;
          }
        }
      }
    }
  }
  if (!converged && off_diagonal_norm(a) > kOffDiagonalTol * scale) {
    throw NumericError("hermitian eigensolver: no convergence after " +
                       std::to_string(kMaxSweeps) + " sweeps");
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index i, Eigen::Index j) { return a(i, i).real() < a(j, j).real(); });

  EigenSystem out;
  out.values.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index i : order) out.values.push_back(a(i, i).real());
  if (want_vectors) {
    out.vectors.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
      out.vectors.col(k) = v.col(order[static_cast<std::size_t>(k)]);
    }
  }
  return out;
}

}  // namespace

double hermiticity_defect(const Matrix& m) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = i; j < m.cols(); ++j) {
      worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
    }
  }
  return worst;
}

std::vector<double> hermitian_eigenvalues(const Matrix& m) {
  return jacobi(m, false).values;
}

EigenSystem hermitian_eigensystem(const Matrix& m) {
  return jacobi(m, true);
}

DensityMatrix::DensityMatrix(Matrix entries, std::optional<SubsystemDims> dims)
    : entries_(std::move(entries)), dims_(dims) {
  if (entries_.rows() != entries_.cols() || entries_.rows() < 1) {
    throw DomainError("DensityMatrix: matrix must be square and non-empty");
  }
  const double largest = entries_.cwiseAbs().maxCoeff();
  if (hermiticity_defect(entries_) > 1e-12 * std::max(1.0, largest)) {
    throw DomainError("DensityMatrix: matrix is not Hermitian");
  }
  if (dims_ && (dims_->a < 1 || dims_->b < 1 ||
                static_cast<Eigen::Index>(dims_->a) * dims_->b != entries_.rows())) {
    throw DomainError("DensityMatrix: subsystem dims do not match the matrix dimension");
  }
}

DensityMatrix DensityMatrix::normalized() const {
  const double tr = trace();
  if (!(tr > 0.0)) throw DomainError("DensityMatrix::normalized: trace is not positive");
  return DensityMatrix(entries_ / tr, dims_);
}

void DensityMatrix::validate_state(double trace_tol, double psd_tol) const {
  if (std::abs(trace() - 1.0) > trace_tol) {
    throw DomainError("DensityMatrix: trace " + std::to_string(trace()) + " is not 1");
  }
  const auto values = hermitian_eigenvalues(entries_);
  if (values.front() < -psd_tol) {
    throw DomainError("DensityMatrix: not positive semidefinite (min eigenvalue " +
                      std::to_string(values.front()) + ")");
  }
}

}  // namespace jcm
