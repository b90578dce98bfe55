#include "qmts/operators.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include <Eigen/Eigenvalues>

namespace qmts {

Vector vectorize(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("vectorize: operator must be square");
  const int d = static_cast<int>(a.rows());
  Vector v(d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) v(i * d + j) = a(i, j);
  return v;
}

Matrix devectorize(const Vector& v) {
  const int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(v.size()))));
  if (static_cast<Eigen::Index>(d) * d != v.size())
    throw std::invalid_argument("devectorize: length is not a perfect square");
  Matrix a(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) a(i, j) = v(i * d + j);
  return a;
}

Matrix dagger(const Matrix& a) { return a.adjoint(); }

double hermiticity_defect(const Matrix& a) {
  return (a - Matrix(a.adjoint())).cwiseAbs().maxCoeff();
}

bool is_hermitian(const Matrix& a, double tolerance) {
  return a.rows() == a.cols() && hermiticity_defect(a) <= tolerance;
}

Matrix elementary(int d, int i, int j) {
  if (i < 0 || j < 0 || i >= d || j >= d)
    throw std::invalid_argument("elementary: index out of range");
  Matrix e = Matrix::Zero(d, d);
  e(i, j) = 1.0;
  return e;
}

Matrix pauli_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Matrix pauli_y() {
  Matrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

Matrix pauli_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

DensityMatrix::DensityMatrix(Matrix rho, double tolerance) : rho_(std::move(rho)) {
  if (rho_.rows() != rho_.cols() || rho_.rows() < 1)
    throw std::invalid_argument("DensityMatrix: matrix must be square and nonempty");
  if (hermiticity_defect(rho_) > tol::hermiticity)
    throw std::invalid_argument("DensityMatrix: not Hermitian");
  if (std::abs(rho_.trace() - Complex(1.0)) > tolerance)
    throw std::invalid_argument("DensityMatrix: trace differs from 1");
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho_, Eigen::EigenvaluesOnly);
  min_eigenvalue_ = es.eigenvalues().minCoeff();
  if (min_eigenvalue_ < -tolerance)
    throw std::invalid_argument("DensityMatrix: negative eigenvalue " +
                                std::to_string(min_eigenvalue_));
}

DensityMatrix DensityMatrix::pure(const Vector& psi) {
  const double n = psi.norm();
  if (n == 0.0) throw std::invalid_argument("DensityMatrix::pure: zero vector");
  Vector u = psi / n;
  return DensityMatrix(u * u.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int d) {
  if (d < 1) throw std::invalid_argument("DensityMatrix::maximally_mixed: d must be positive");
  return DensityMatrix(Matrix::Identity(d, d) / static_cast<double>(d));
}

MeasurementBasis::MeasurementBasis(std::vector<Vector> vectors,
                                   std::vector<std::string> labels)
    : vectors_(std::move(vectors)), labels_(std::move(labels)) {
  if (vectors_.empty()) throw std::invalid_argument("MeasurementBasis: empty");
  if (vectors_.size() != labels_.size())
    throw std::invalid_argument("MeasurementBasis: one label per vector required");
  const auto d = static_cast<Eigen::Index>(vectors_.size());
  for (const auto& v : vectors_)
    if (v.size() != d)
      throw std::invalid_argument("MeasurementBasis: vector count must equal dimension");
  for (std::size_t i = 0; i < vectors_.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const Complex g = vectors_[i].dot(vectors_[j]);  // <v_i | v_j>
      const double expected = i == j ? 1.0 : 0.0;
      if (std::abs(g - expected) > tol::gram)
        throw std::invalid_argument("MeasurementBasis: vectors not orthonormal");
    }
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_)
    if (!seen.insert(l).second)
      throw std::invalid_argument("MeasurementBasis: duplicate outcome label '" + l +
                                  "' (degenerate observable)");
}

int MeasurementBasis::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<int>(i);
  throw std::invalid_argument("MeasurementBasis: unknown label '" + label + "'");
}

Matrix MeasurementBasis::projector(int x) const {
  const Vector& v = vectors_.at(x);
  return v * v.adjoint();
}

Matrix MeasurementBasis::observable(const std::vector<double>& values) const {
  if (values.size() != vectors_.size())
    throw std::invalid_argument("MeasurementBasis::observable: one value per outcome");
  Matrix x = Matrix::Zero(dim(), dim());
  for (int i = 0; i < dim(); ++i) x += values[i] * projector(i);
  return x;
}

MeasurementBasis MeasurementBasis::computational(int d) {
  if (d < 1) throw std::invalid_argument("MeasurementBasis::computational: d must be positive");
  std::vector<Vector> vs;
  std::vector<std::string> ls;
  for (int i = 0; i < d; ++i) {
    Vector v = Vector::Zero(d);
    v(i) = 1.0;
    vs.push_back(std::move(v));
    ls.push_back(std::to_string(i));
  }
  return MeasurementBasis(std::move(vs), std::move(ls));
}

MeasurementBasis MeasurementBasis::sigma_z() {
  Vector up = Vector::Zero(2), down = Vector::Zero(2);
  up(0) = 1.0;
  down(1) = 1.0;
  return MeasurementBasis({up, down}, {"+1", "-1"});
}

MeasurementBasis MeasurementBasis::sigma_x() {
  const double r = 1.0 / std::sqrt(2.0);
  Vector plus(2), minus(2);
  plus << r, r;
  minus << r, -r;
  return MeasurementBasis({plus, minus}, {"+", "-"});
}

}  // namespace qmts
