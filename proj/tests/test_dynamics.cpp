#include <doctest.h>

#include <numbers>

#include "helpers.hpp"

using namespace qmts;
using namespace test_helpers;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE_BEGIN("dynamics");

TEST_CASE("lindbladian of the trivial generator vanishes") {
  const Superoperator l =
      lindbladian_superoperator(LindbladGenerator(Matrix::Zero(2, 2), {}));
  CHECK(max_entry_norm(l) == 0.0);
}

TEST_CASE("lindbladian rejects a non-Hermitian Hamiltonian") {
  Matrix h(2, 2);
  h << 0.0, 1.0, 0.0, 0.0;
  CHECK_THROWS_AS(LindbladGenerator(h, {}), std::invalid_argument);
}

TEST_CASE("pure dephasing generator matches the closed form") {
  const double gamma = 0.8, p0 = 0.7;
  const Superoperator l = pure_dephasing_lindbladian(gamma, p0);
  Matrix expected = Matrix::Zero(4, 4);
  expected(1, 1) = Complex(-2.0 * gamma, -2.0 * p0);
  expected(2, 2) = Complex(-2.0 * gamma, 2.0 * p0);
  CHECK(max_entry_norm(l.matrix() - expected) <= 1e-14);
}

TEST_CASE("lindbladian output is traceless on random states") {
  Rng rng(21);
  const Superoperator l = lindbladian_superoperator(random_lindbladian(rng, 3));
  for (int trial = 0; trial < 20; ++trial) {
    const DensityMatrix rho = random_density(rng, 3);
    CHECK(std::abs(l.apply(rho.matrix()).trace()) <= 1e-12);
  }
}

TEST_CASE("propagate: edge cases and the dephasing multiplier") {
  const Superoperator l = pure_dephasing_lindbladian(1.0, 0.4);
  CHECK(max_entry_norm(propagate(l, 0.0) - Superoperator::identity(2)) <= 1e-15);
  CHECK_THROWS_AS(propagate(l, -0.1), std::invalid_argument);

  // <-1| rho |+1> picks up exactly e^{2 i p0 t} e^{-2 Gamma t}.
  for (double t : {0.3, 1.0, 2.4}) {
    const Matrix out = propagate(l, t).apply(elementary(2, 1, 0));
    const Complex expected = k_lorentzian(1.0, 0.4, t);
    CHECK(std::abs(out(1, 0) - expected) <= 1e-13);
    CHECK(std::abs(out(0, 1)) <= 1e-15);
  }
}

TEST_CASE("propagators of random Lindbladians are CPTP") {
  Rng rng(22);
  for (int trial = 0; trial < 6; ++trial) {
    const int d = trial % 2 == 0 ? 2 : 3;
    const Superoperator l = lindbladian_superoperator(random_lindbladian(rng, d));
    for (double t : {0.0, 0.5, 2.0, 5.0}) {
      const Superoperator lam = propagate(l, t);
      CHECK(lam.is_trace_preserving(1e-10));
      CHECK(lam.choi_min_eigenvalue() >= -1e-8);
    }
  }
}

TEST_CASE("semigroup law e^{L(t+s)} = e^{Lt} e^{Ls}") {
  Rng rng(23);
  for (int trial = 0; trial < 5; ++trial) {
    const Superoperator l = lindbladian_superoperator(random_lindbladian(rng, 2));
    std::uniform_real_distribution<double> uni(0.0, 2.0);
    const double t = uni(rng), s = uni(rng);
    CHECK(max_entry_norm(propagate(l, t) * propagate(l, s) - propagate(l, t + s)) <= 1e-9);
  }
}

TEST_CASE("dephasing propagator family") {
  const auto family = dephasing_propagator_family(lorentz_k(1.0, 0.0));
  CHECK(max_entry_norm(family(0.7, 0.7) - Superoperator::identity(2)) <= 1e-10);

  const Matrix out = family(1.0, 0.5).apply(elementary(2, 1, 0));
  CHECK(std::abs(out(1, 0) - std::exp(-1.0)) <= 1e-14);

  CHECK_THROWS_AS(family(0.5, 0.7), std::invalid_argument);

  // The Gaussian-mixture decoherence function has a true zero at s = pi/2.
  const auto gauss_family = dephasing_propagator_family(gauss_k());
  CHECK_THROWS_AS(gauss_family(2.0, kPi / 2.0), SingularPropagatorError);
}

TEST_CASE("families satisfy the composition identity on random triples") {
  Rng rng(24);
  std::uniform_real_distribution<double> uni(0.0, 1.4);
  const auto lorentz_family = dephasing_propagator_family(lorentz_k(1.0, 0.3));
  const auto gauss_family = dephasing_propagator_family(gauss_k());
  const auto semi = semigroup_family(pure_dephasing_lindbladian(0.6, 0.2));
  for (int trial = 0; trial < 50; ++trial) {
    double a = uni(rng), b = uni(rng), c = uni(rng);
    double r = std::min({a, b, c}), t = std::max({a, b, c});
    double s = a + b + c - r - t;
    for (const auto* family : {&lorentz_family, &gauss_family, &semi}) {
      const Superoperator lhs = (*family)(t, s) * (*family)(s, r);
      CHECK(max_entry_norm(lhs - (*family)(t, r)) <= 1e-8);
    }
  }
}

TEST_CASE("unitary family matches the closed-form rotation") {
  const auto family = unitary_family(pauli_y());
  for (double t : {0.2, 0.9}) {
    const Superoperator expected = Superoperator::conjugation(sigma_y_rotation(t));
    CHECK(max_entry_norm(family(t, 0.0) - expected) <= 1e-12);
  }
  CHECK(family.kind() == FamilyKind::unitary);
}

TEST_CASE("dilation model construction and trivial spectrum") {
  CHECK_THROWS_AS(NumericGridSpectrum({}), std::invalid_argument);
  CHECK_THROWS_AS(NumericGridSpectrum({{0.0, -0.2}}), std::invalid_argument);

  const DilationModel trivial = dilation_unitary(NumericGridSpectrum({{0.0, 1.0}}));
  for (double t : {0.0, 1.3, 7.9})
    CHECK(max_entry_norm(trivial.global_unitary(t) - Matrix::Identity(2, 2)) <= 1e-15);
}

TEST_CASE("dilation unitaries are unitary and start at the identity") {
  const DilationModel model = dilation_unitary(
      NumericGridSpectrum({{-1.0, 0.2}, {0.0, 0.5}, {2.0, 0.3}}));
  CHECK(max_entry_norm(model.global_unitary(0.0) - Matrix::Identity(6, 6)) == 0.0);
  for (double t : {0.4, 1.7}) {
    const Matrix u = model.global_unitary(t);
    CHECK((u * u.adjoint() - Matrix::Identity(6, 6)).cwiseAbs().maxCoeff() <= 1e-12);
  }

  const DilationModel generic = sigma_y_dilation();
  for (double t : {0.4, 1.7}) {
    const Matrix u = generic.global_unitary(t);
    CHECK((u * u.adjoint() - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("partial trace of the dilated evolution reproduces the dephasing map") {
  const NumericGridSpectrum grid({{-0.7, 0.15}, {-0.1, 0.3}, {0.4, 0.35}, {1.2, 0.2}});
  const DilationModel model = dilation_unitary(grid);
  const int m = model.env_dim();

  Rng rng(25);
  const DensityMatrix rho_s = random_density(rng, 2);
  Matrix rho_global = Matrix::Zero(2 * m, 2 * m);
  const Matrix env = model.env_state();
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      rho_global.block(a * m, b * m, m, m) = rho_s.matrix()(a, b) * env;

  for (double t : {0.35, 1.1}) {
    const Matrix u = model.global_unitary(t);
    const Matrix evolved = u * rho_global * u.adjoint();
    Matrix reduced = Matrix::Zero(2, 2);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int j = 0; j < m; ++j) reduced(a, b) += evolved(a * m + j, b * m + j);

    const Complex factor = model.reduced_offdiagonal_factor(t);
    Matrix expected = rho_s.matrix();
    expected(1, 0) *= factor;
    expected(0, 1) *= std::conj(factor);
    CHECK((reduced - expected).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("2001-point grids reproduce the closed-form decoherence functions") {
  const auto lorentz_grid =
      default_momentum_grid(LorentzianSpectrum{1.0, 0.0}, 2001);
  CHECK(lorentz_grid.size() == 2001);
  const DilationModel lorentz_model = dilation_unitary(lorentz_grid);
  for (int i = 0; i <= 20; ++i) {
    const double t = 0.1 * i;
    const Complex approx = lorentz_model.reduced_offdiagonal_factor(t);
    CHECK(std::abs(approx - k_lorentzian(1.0, 0.0, t)) <= 1e-3);
  }

  const auto gauss_grid =
      default_momentum_grid(GaussianMixtureSpectrum{1.0, 1.0, 1.0, 2.0}, 2001);
  const DilationModel gauss_model = dilation_unitary(gauss_grid);
  for (int i = 0; i <= 20; ++i) {
    const double t = 0.1 * i;
    const Complex approx = gauss_model.reduced_offdiagonal_factor(t);
    CHECK(std::abs(approx - k_gaussian_mixture(1.0, 1.0, 1.0, 2.0, t)) <= 1e-3);
  }
}

TEST_SUITE_END();
