#include "qmts/ensembles.hpp"

#include <Eigen/QR>

namespace qmts {

namespace {

Matrix ginibre(Rng& rng, int d) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
  return g;
}

}  // namespace

LindbladGenerator random_lindbladian(Rng& rng, int d, int n_jumps) {
  const Matrix g = ginibre(rng, d);
  Matrix h = 0.5 * (g + Matrix(g.adjoint()));
  std::vector<Matrix> jumps;
  for (int k = 0; k < n_jumps; ++k) {
    Matrix l = ginibre(rng, d);
    jumps.push_back(l / l.norm());
  }
  return LindbladGenerator(std::move(h), std::move(jumps));
}

MeasurementBasis random_basis(Rng& rng, int d) {
  const Matrix g = ginibre(rng, d);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  std::vector<Vector> vectors;
  std::vector<std::string> labels;
  for (int i = 0; i < d; ++i) {
    vectors.push_back(q.col(i));
    labels.push_back(std::to_string(i));
  }
  return MeasurementBasis(std::move(vectors), std::move(labels));
}

LindbladGenerator random_ncgd_lindbladian(Rng& rng, const MeasurementBasis& basis) {
  const int d = basis.dim();
  std::uniform_real_distribution<double> uni(0.1, 1.0);
  Matrix h = Matrix::Zero(d, d);
  for (int x = 0; x < d; ++x) h += uni(rng) * basis.projector(x);
  std::vector<Matrix> jumps;
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y) {
      if (x == y) continue;
      const double rate = uni(rng);
      jumps.push_back(std::sqrt(rate) * basis.vector(x) * basis.vector(y).adjoint());
    }
  return LindbladGenerator(std::move(h), std::move(jumps));
}

DensityMatrix random_density(Rng& rng, int d) {
  const Matrix g = ginibre(rng, d);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace();
  rho = 0.5 * (rho + Matrix(rho.adjoint()));
  return DensityMatrix(std::move(rho));
}

DensityMatrix random_diagonal_density(Rng& rng, const MeasurementBasis& basis) {
  const int d = basis.dim();
  std::uniform_real_distribution<double> uni(0.05, 1.0);
  std::vector<double> p(d);
  double total = 0.0;
  for (int x = 0; x < d; ++x) {
    p[x] = uni(rng);
    total += p[x];
  }
  Matrix rho = Matrix::Zero(d, d);
  for (int x = 0; x < d; ++x) rho += (p[x] / total) * basis.projector(x);
  rho = 0.5 * (rho + Matrix(rho.adjoint()));
  return DensityMatrix(std::move(rho));
}

}  // namespace qmts
