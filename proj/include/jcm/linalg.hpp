#pragma once

#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace jcm {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

struct SubsystemDims {
  int a = 0;  // first factor (the atom / qubit A)
  int b = 0;  // second factor, the one transposed by partial_transpose
  friend bool operator==(const SubsystemDims&, const SubsystemDims&) = default;
};

/// Dense Hermitian matrix, optionally tagged with a bipartition d_A x d_B
/// (row index = a * d_B + b).
///
/// Construction checks squareness, Hermiticity (1e-12 relative to the
/// largest entry) and that d_A * d_B matches the dimension. Trace and
/// positivity are checked on demand by validate_state(), since unnormalized
/// projections and truncated states are legitimate intermediate values.
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix entries, std::optional<SubsystemDims> dims = std::nullopt);

  const Matrix& matrix() const { return entries_; }
  Eigen::Index dim() const { return entries_.rows(); }
  const std::optional<SubsystemDims>& dims() const { return dims_; }

  double trace() const { return entries_.trace().real(); }

  /// Same state scaled to unit trace. Throws DomainError if the trace is not positive.
  DensityMatrix normalized() const;

  /// Throws DomainError unless |trace - 1| <= trace_tol and the smallest
  /// eigenvalue is >= -psd_tol.
  void validate_state(double trace_tol = 1e-10, double psd_tol = 1e-10) const;

 private:
  Matrix entries_;
  std::optional<SubsystemDims> dims_;
};

struct EigenSystem {
  std::vector<double> values;  // ascending
  Matrix vectors;              // column k belongs to values[k]
};

/// Eigenvalues (ascending) of a Hermitian matrix by cyclic complex Jacobi
/// rotations. Throws DomainError when the input is not Hermitian within
/// 1e-10 * max(1, |A|_F) and NumericError after 100 sweeps without convergence.
std::vector<double> hermitian_eigenvalues(const Matrix& m);

/// As hermitian_eigenvalues, also accumulating the unitary of eigenvectors.
EigenSystem hermitian_eigensystem(const Matrix& m);

/// Largest |m(i,j) - conj(m(j,i))|.
double hermiticity_defect(const Matrix& m);

}  // namespace jcm
