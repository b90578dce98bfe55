#pragma once

#include <string>
#include <vector>

#include "qmts/types.hpp"

namespace qmts {

/// Row-major vectorization: vec(A)(i*d + j) = A(i, j), matching the
/// elementary-operator basis E_ij = |i><j| ordered (0,0),(0,1),(1,0),(1,1),...
Vector vectorize(const Matrix& a);

/// Inverse of vectorize. The length of v must be a perfect square.
Matrix devectorize(const Vector& v);

Matrix dagger(const Matrix& a);

/// max_ij |A - A^dagger|
double hermiticity_defect(const Matrix& a);

bool is_hermitian(const Matrix& a, double tolerance = tol::hermiticity);

/// Elementary operator E_ij = |i><j| in dimension d.
Matrix elementary(int d, int i, int j);

Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();

/// Validated density matrix: Hermitian (1e-12), unit trace (1e-9) and
/// positive semidefinite (min eigenvalue >= -1e-9). The minimum eigenvalue is
/// kept for diagnostics.
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix rho, double tolerance = tol::structural);

  const Matrix& matrix() const { return rho_; }
  int dim() const { return static_cast<int>(rho_.rows()); }
  double min_eigenvalue() const { return min_eigenvalue_; }

  static DensityMatrix pure(const Vector& psi);
  static DensityMatrix maximally_mixed(int d);

 private:
  Matrix rho_;
  double min_eigenvalue_ = 0.0;
};

/// Ordered orthonormal family of rank-1 projectors for a non-degenerate
/// observable. One label per vector; duplicate labels are rejected since a
/// repeated outcome value would make the observable degenerate.
class MeasurementBasis {
 public:
  MeasurementBasis(std::vector<Vector> vectors, std::vector<std::string> labels);

  int dim() const { return static_cast<int>(vectors_.size()); }
  const Vector& vector(int x) const { return vectors_.at(x); }
  const std::string& label(int x) const { return labels_.at(x); }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Index of the outcome with the given label; throws on unknown labels.
  int index_of(const std::string& label) const;

  /// Rank-1 projector |psi_x><psi_x|.
  Matrix projector(int x) const;

  /// X = sum_x value_x |psi_x><psi_x|
  Matrix observable(const std::vector<double>& values) const;

  /// Computational basis of dimension d with labels "0", "1", ...
  static MeasurementBasis computational(int d);
  /// sigma_z eigenbasis, labels "+1" (index 0) and "-1" (index 1).
  static MeasurementBasis sigma_z();
  /// sigma_x eigenbasis, labels "+" (index 0) and "-" (index 1).
  static MeasurementBasis sigma_x();

 private:
  std::vector<Vector> vectors_;
  std::vector<std::string> labels_;
};

}  // namespace qmts
