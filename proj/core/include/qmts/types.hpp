#pragma once

#include <complex>
#include <Eigen/Dense>

namespace qmts {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Default tolerances. Structural tolerances guard object construction
// (trace, positivity, orthonormality); verdict tolerances separate genuine
// violations from double-precision noise when classifying dynamics.
namespace tol {
inline constexpr double hermiticity = 1e-12;
inline constexpr double structural = 1e-9;
inline constexpr double gram = 1e-10;
inline constexpr double satisfied = 1e-9;
inline constexpr double violated = 1e-6;
inline constexpr double singular_k = 1e-12;
}  // namespace tol

}  // namespace qmts
