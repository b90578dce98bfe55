#pragma once

#include <random>

#include "qmts/dynamics.hpp"
#include "qmts/operators.hpp"

namespace qmts {

using Rng = std::mt19937_64;

/// Gaussian Hermitian Hamiltonian plus one or two jump operators with
/// complex Gaussian entries scaled to unit Frobenius norm.
LindbladGenerator random_lindbladian(Rng& rng, int d, int n_jumps = 2);

/// Haar-distributed orthonormal basis (QR of a Ginibre matrix), labels
/// "0", "1", ...
MeasurementBasis random_basis(Rng& rng, int d);

/// Generator that is NCGD with respect to the given basis by construction:
/// classical jump rates |psi_x><psi_y| plus a Hamiltonian diagonal in the
/// basis. Both pieces preserve the diagonal/off-diagonal split, so no
/// coherence ever feeds back into populations.
LindbladGenerator random_ncgd_lindbladian(Rng& rng, const MeasurementBasis& basis);

DensityMatrix random_density(Rng& rng, int d);

/// Random state diagonal in the given basis.
DensityMatrix random_diagonal_density(Rng& rng, const MeasurementBasis& basis);

}  // namespace qmts
