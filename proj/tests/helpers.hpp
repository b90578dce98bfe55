#pragma once

#include <cmath>
#include <random>

#include "qmts/qmts.hpp"

namespace test_helpers {

using namespace qmts;

inline Matrix sigma_y_rotation(double t) {
  Matrix u(2, 2);
  u << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
  return u;  // e^{-i sigma_y t}
}

inline Superoperator sigma_y_lindbladian() {
  return lindbladian_superoperator(LindbladGenerator(pauli_y(), {}));
}

inline Superoperator pure_dephasing_lindbladian(double gamma, double p0) {
  return lindbladian_superoperator(
      LindbladGenerator(p0 * pauli_z(), {std::sqrt(gamma) * pauli_z()}));
}

inline DensityMatrix z_state(int index) {
  Vector v = Vector::Zero(2);
  v(index) = 1.0;
  return DensityMatrix::pure(v);
}

inline DensityMatrix plus_state() {
  Vector v(2);
  v << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  return DensityMatrix::pure(v);
}

inline DilationModel sigma_y_dilation() {
  return DilationModel::generic(
      2, 1, [](double t) { return sigma_y_rotation(t); }, Matrix::Identity(1, 1));
}

inline DecoherenceFunction lorentz_k(double gamma = 1.0, double p0 = 0.0) {
  return DecoherenceFunction(LorentzianSpectrum{gamma, p0});
}

inline DecoherenceFunction gauss_k(double a_theta = 1.0, double sigma = 1.0,
                                   double p1 = 1.0, double p2 = 2.0) {
  return DecoherenceFunction(GaussianMixtureSpectrum{a_theta, sigma, p1, p2});
}

inline Matrix random_operator(Rng& rng, int d) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = Complex(gauss(rng), gauss(rng));
  return m;
}

}  // namespace test_helpers
