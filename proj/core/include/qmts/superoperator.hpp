#pragma once

#include <string>

#include "qmts/operators.hpp"
#include "qmts/types.hpp"

namespace qmts {

/// Which matrix norm a map-level residual is measured in. The column-sum
/// norm is the induced l1 norm of the d^2 x d^2 superoperator matrix; the
/// max-entry norm is the largest absolute entry. Both are provided: the
/// bundled map fixture's three-decimal residuals come out of the max-entry
/// convention (see the coherence tests), while column-sum reads them as
/// exactly twice that.
enum class NormConvention { column_sum, max_entry };

std::string to_string(NormConvention convention);
NormConvention norm_convention_from_string(const std::string& name);

/// d^2 x d^2 matrix acting on row-major vectorized operators.
class Superoperator {
 public:
  Superoperator(int dim, Matrix matrix);

  static Superoperator identity(int d);
  static Superoperator zero(int d);
  /// rho -> a rho b
  static Superoperator from_left_right(const Matrix& a, const Matrix& b);
  /// rho -> u rho u^dagger
  static Superoperator conjugation(const Matrix& u);

  int dim() const { return dim_; }
  const Matrix& matrix() const { return matrix_; }

  Matrix apply(const Matrix& op) const;

  /// Map composition: (a * b)[rho] = a[b[rho]].
  Superoperator operator*(const Superoperator& rhs) const;
  Superoperator operator+(const Superoperator& rhs) const;
  Superoperator operator-(const Superoperator& rhs) const;

  bool is_trace_preserving(double tolerance = tol::structural) const;

  /// Choi matrix sum_ij E_ij (x) S[E_ij]; PSD iff the map is completely
  /// positive.
  Matrix choi() const;
  double choi_min_eigenvalue() const;

 private:
  int dim_;
  Matrix matrix_;
};

/// Maximum over columns of the sum of absolute values of the entries.
double column_sum_norm(const Superoperator& s);
double column_sum_norm(const Matrix& m);

/// Maximum absolute value of any entry.
double max_entry_norm(const Superoperator& s);
double max_entry_norm(const Matrix& m);

double superop_norm(const Superoperator& s, NormConvention convention);

/// P_x . P_x as a map: rho -> |psi_x><psi_x| rho |psi_x><psi_x|.
Superoperator projector_superoperator(const MeasurementBasis& basis, int x);

/// Complete dephasing map Delta = sum_x P_x . P_x. Idempotent, trace
/// preserving, completely positive; projects onto the diagonal in the basis.
Superoperator dephasing_superoperator(const MeasurementBasis& basis);

}  // namespace qmts
