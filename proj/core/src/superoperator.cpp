#include "qmts/superoperator.hpp"

#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace qmts {

std::string to_string(NormConvention convention) {
  return convention == NormConvention::column_sum ? "column-sum" : "max-entry";
}

NormConvention norm_convention_from_string(const std::string& name) {
  if (name == "column-sum" || name == "column_sum") return NormConvention::column_sum;
  if (name == "max-entry" || name == "max_entry") return NormConvention::max_entry;
  throw std::invalid_argument("unknown norm convention '" + name + "'");
}

Superoperator::Superoperator(int dim, Matrix matrix) : dim_(dim), matrix_(std::move(matrix)) {
  if (dim_ < 1) throw std::invalid_argument("Superoperator: dimension must be positive");
  const Eigen::Index n = static_cast<Eigen::Index>(dim_) * dim_;
  if (matrix_.rows() != n || matrix_.cols() != n)
    throw std::invalid_argument("Superoperator: matrix must be dim^2 x dim^2");
}

Superoperator Superoperator::identity(int d) {
  return Superoperator(d, Matrix::Identity(static_cast<Eigen::Index>(d) * d,
                                           static_cast<Eigen::Index>(d) * d));
}

Superoperator Superoperator::zero(int d) {
  return Superoperator(d, Matrix::Zero(static_cast<Eigen::Index>(d) * d,
                                       static_cast<Eigen::Index>(d) * d));
}

Superoperator Superoperator::from_left_right(const Matrix& a, const Matrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw std::invalid_argument("from_left_right: operators must be square with equal dims");
  const int d = static_cast<int>(a.rows());
  // Row-major vectorization turns rho -> a rho b into a (x) b^T.
  Matrix m(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) m(i * d + j, k * d + l) = a(i, k) * b(l, j);
  return Superoperator(d, std::move(m));
}

Superoperator Superoperator::conjugation(const Matrix& u) {
  return from_left_right(u, u.adjoint());
}

Matrix Superoperator::apply(const Matrix& op) const {
  if (op.rows() != dim_ || op.cols() != dim_)
    throw std::invalid_argument("Superoperator::apply: dimension mismatch");
  return devectorize(matrix_ * vectorize(op));
}

Superoperator Superoperator::operator*(const Superoperator& rhs) const {
  if (dim_ != rhs.dim_) throw std::invalid_argument("Superoperator: dimension mismatch");
  return Superoperator(dim_, matrix_ * rhs.matrix_);
}

Superoperator Superoperator::operator+(const Superoperator& rhs) const {
  if (dim_ != rhs.dim_) throw std::invalid_argument("Superoperator: dimension mismatch");
  return Superoperator(dim_, matrix_ + rhs.matrix_);
}

Superoperator Superoperator::operator-(const Superoperator& rhs) const {
  if (dim_ != rhs.dim_) throw std::invalid_argument("Superoperator: dimension mismatch");
  return Superoperator(dim_, matrix_ - rhs.matrix_);
}

bool Superoperator::is_trace_preserving(double tolerance) const {
  // Trace of the image of E_ij is delta_ij: sum_m M[(m,m), (i,j)] = delta_ij.
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      Complex sum = 0.0;
      for (int m = 0; m < dim_; ++m) sum += matrix_(m * dim_ + m, i * dim_ + j);
      const Complex expected = i == j ? Complex(1.0) : Complex(0.0);
      if (std::abs(sum - expected) > tolerance) return false;
    }
  return true;
}

Matrix Superoperator::choi() const {
  const int d = dim_;
  Matrix c(d * d, d * d);
  for (int a = 0; a < d; ++a)
    for (int m = 0; m < d; ++m)
      for (int b = 0; b < d; ++b)
        for (int n = 0; n < d; ++n)
          c(a * d + m, b * d + n) = matrix_(m * d + n, a * d + b);
  return c;
}

double Superoperator::choi_min_eigenvalue() const {
  Matrix c = choi();
  Matrix h = 0.5 * (c + Matrix(c.adjoint()));
  Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

double column_sum_norm(const Matrix& m) {
  double best = 0.0;
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    best = std::max(best, m.col(c).cwiseAbs().sum());
  return best;
}

double column_sum_norm(const Superoperator& s) { return column_sum_norm(s.matrix()); }

double max_entry_norm(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double max_entry_norm(const Superoperator& s) { return max_entry_norm(s.matrix()); }

double superop_norm(const Superoperator& s, NormConvention convention) {
  return convention == NormConvention::column_sum ? column_sum_norm(s) : max_entry_norm(s);
}

Superoperator projector_superoperator(const MeasurementBasis& basis, int x) {
  const Matrix p = basis.projector(x);
  return Superoperator::from_left_right(p, p);
}

Superoperator dephasing_superoperator(const MeasurementBasis& basis) {
  Superoperator delta = Superoperator::zero(basis.dim());
  for (int x = 0; x < basis.dim(); ++x) delta = delta + projector_superoperator(basis, x);
  return delta;
}

}  // namespace qmts
