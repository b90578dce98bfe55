#include "qmts/dynamics.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include "qmts/errors.hpp"

namespace qmts {

LindbladGenerator::LindbladGenerator(Matrix h, std::vector<Matrix> jump_ops)
    : hamiltonian(std::move(h)), jumps(std::move(jump_ops)) {
  if (hamiltonian.rows() != hamiltonian.cols() || hamiltonian.rows() < 1)
    throw std::invalid_argument("LindbladGenerator: H must be square");
  if (hermiticity_defect(hamiltonian) > 1e-10)
    throw std::invalid_argument("LindbladGenerator: H must be Hermitian");
  for (const auto& l : jumps)
    if (l.rows() != hamiltonian.rows() || l.cols() != hamiltonian.cols())
      throw std::invalid_argument("LindbladGenerator: jump operator dimension mismatch");
}

Superoperator lindbladian_superoperator(const LindbladGenerator& gen) {
  const int d = gen.dim();
  const Matrix id = Matrix::Identity(d, d);
  const Complex i_unit(0.0, 1.0);
  Matrix m = (-i_unit) * (Superoperator::from_left_right(gen.hamiltonian, id).matrix() -
                          Superoperator::from_left_right(id, gen.hamiltonian).matrix());
  for (const auto& l : gen.jumps) {
    const Matrix ldl = l.adjoint() * l;
    m += Superoperator::from_left_right(l, l.adjoint()).matrix();
    m -= 0.5 * Superoperator::from_left_right(ldl, id).matrix();
    m -= 0.5 * Superoperator::from_left_right(id, ldl).matrix();
  }
  return Superoperator(d, std::move(m));
}

Superoperator propagate(const Superoperator& lindbladian, double t) {
  if (t < 0.0) throw std::invalid_argument("propagate: t must be nonnegative");
  const Matrix lt = lindbladian.matrix() * t;
  return Superoperator(lindbladian.dim(), lt.exp());
}

PropagatorFamily::PropagatorFamily(int dim, FamilyKind kind,
                                   std::function<Superoperator(double, double)> evaluator)
    : dim_(dim), kind_(kind), evaluator_(std::move(evaluator)) {
  if (dim_ < 1) throw std::invalid_argument("PropagatorFamily: dimension must be positive");
}

Superoperator PropagatorFamily::operator()(double t, double s) const {
  if (s < 0.0 || t < s)
    throw std::invalid_argument("PropagatorFamily: need 0 <= s <= t");
  return evaluator_(t, s);
}

PropagatorFamily semigroup_family(const Superoperator& lindbladian) {
  return PropagatorFamily(lindbladian.dim(), FamilyKind::semigroup,
                          [lindbladian](double t, double s) {
                            return propagate(lindbladian, t - s);
                          });
}

PropagatorFamily unitary_family(const Matrix& hamiltonian) {
  if (hermiticity_defect(hamiltonian) > 1e-10)
    throw std::invalid_argument("unitary_family: H must be Hermitian");
  const int d = static_cast<int>(hamiltonian.rows());
  Eigen::SelfAdjointEigenSolver<Matrix> es(hamiltonian);
  const Matrix v = es.eigenvectors();
  const Eigen::VectorXd ev = es.eigenvalues();
  return PropagatorFamily(d, FamilyKind::unitary, [v, ev, d](double t, double s) {
    Vector phases(d);
    for (int i = 0; i < d; ++i) phases(i) = std::exp(Complex(0.0, -ev(i) * (t - s)));
    const Matrix u = v * phases.asDiagonal() * v.adjoint();
    return Superoperator::conjugation(u);
  });
}

PropagatorFamily dephasing_propagator_family(const DecoherenceFunction& k) {
  if (std::abs(k(0.0) - Complex(1.0)) > 1e-12)
    throw std::invalid_argument("dephasing_propagator_family: k(0) must be 1");
  return PropagatorFamily(2, FamilyKind::divisible_from_k, [k](double t, double s) {
    const Complex ks = k(s);
    if (std::abs(ks) < tol::singular_k)
      throw SingularPropagatorError(
          "dephasing propagator singular: k(s) vanishes at s = " + std::to_string(s));
    const Complex ratio = k(t) / ks;
    Matrix m = Matrix::Zero(4, 4);
    m(0, 0) = 1.0;
    m(1, 1) = std::conj(ratio);
    m(2, 2) = ratio;
    m(3, 3) = 1.0;
    return Superoperator(2, std::move(m));
  });
}

DilationModel DilationModel::qubit_dephasing(const NumericGridSpectrum& grid) {
  DilationModel model;
  model.system_dim_ = 2;
  model.env_dim_ = static_cast<int>(grid.size());
  model.grid_ = grid;
  return model;
}

DilationModel DilationModel::generic(int system_dim, int env_dim,
                                     std::function<Matrix(double)> global_unitary,
                                     Matrix env_state) {
  if (system_dim < 1 || env_dim < 1)
    throw std::invalid_argument("DilationModel: dimensions must be positive");
  if (env_state.rows() != env_dim || env_state.cols() != env_dim)
    throw std::invalid_argument("DilationModel: environment state dimension mismatch");
  DilationModel model;
  model.system_dim_ = system_dim;
  model.env_dim_ = env_dim;
  model.unitary_ = std::move(global_unitary);
  model.env_state_ = std::move(env_state);
  return model;
}

const NumericGridSpectrum& DilationModel::grid() const {
  if (!grid_) throw std::logic_error("DilationModel: not a grid model");
  return *grid_;
}

Matrix DilationModel::global_unitary(double t) const {
  if (!grid_) return unitary_(t);
  // Diagonal phases e^{-i l p t} over |system l> (x) |p_j>, l = +-1.
  const int m = env_dim_;
  Matrix u = Matrix::Zero(2 * m, 2 * m);
  const auto& nodes = grid_->nodes();
  for (int j = 0; j < m; ++j) {
    u(j, j) = std::exp(Complex(0.0, -nodes[j].p * t));
    u(m + j, m + j) = std::exp(Complex(0.0, nodes[j].p * t));
  }
  return u;
}

Matrix DilationModel::env_state() const {
  if (!grid_) return env_state_;
  const int m = env_dim_;
  Vector phi(m);
  const auto& nodes = grid_->nodes();
  for (int j = 0; j < m; ++j) phi(j) = std::sqrt(nodes[j].weight);
  return phi * phi.adjoint();
}

Complex DilationModel::reduced_offdiagonal_factor(double t) const {
  if (!grid_) throw std::logic_error("DilationModel: not a grid model");
  Complex sum = 0.0;
  for (const auto& n : grid_->nodes()) sum += n.weight * std::exp(Complex(0.0, 2.0 * n.p * t));
  return sum;
}

DilationModel dilation_unitary(const NumericGridSpectrum& spectrum) {
  return DilationModel::qubit_dephasing(spectrum);
}

}  // namespace qmts
