#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "qmts/dephasing.hpp"
#include "qmts/operators.hpp"
#include "qmts/superoperator.hpp"

namespace qmts {

/// H plus jump operators; all square and of equal dimension, H Hermitian
/// within 1e-10.
struct LindbladGenerator {
  Matrix hamiltonian;
  std::vector<Matrix> jumps;

  LindbladGenerator(Matrix h, std::vector<Matrix> jump_ops);
  int dim() const { return static_cast<int>(hamiltonian.rows()); }
};

/// Matrix of L: rho -> -i[H, rho] + sum_k (L_k rho L_k^dag
/// - {L_k^dag L_k, rho} / 2). Trace preserving by construction.
Superoperator lindbladian_superoperator(const LindbladGenerator& gen);

/// e^{L t} by scaling-and-squaring; rejects t < 0.
Superoperator propagate(const Superoperator& lindbladian, double t);

enum class FamilyKind { semigroup, divisible_from_k, unitary };

/// Two-parameter propagator family Lambda(t, s), 0 <= s <= t, with
/// Lambda(t, t) = identity and Lambda(t, s) Lambda(s, r) = Lambda(t, r).
/// Evaluators are pure and reentrant.
class PropagatorFamily {
 public:
  PropagatorFamily(int dim, FamilyKind kind,
                   std::function<Superoperator(double, double)> evaluator);

  Superoperator operator()(double t, double s) const;
  Superoperator at(double t) const { return (*this)(t, 0.0); }
  int dim() const { return dim_; }
  FamilyKind kind() const { return kind_; }

 private:
  int dim_;
  FamilyKind kind_;
  std::function<Superoperator(double, double)> evaluator_;
};

/// Lambda(t, s) = e^{L (t-s)}.
PropagatorFamily semigroup_family(const Superoperator& lindbladian);

/// Lambda(t, s): rho -> U(t-s) rho U(t-s)^dag for U(u) = e^{-i H u}.
PropagatorFamily unitary_family(const Matrix& hamiltonian);

/// Qubit dephasing propagators: Lambda(t, s) multiplies the coherence
/// <\,-1|rho|+1> by k(t)/k(s) (and its conjugate partner by the conjugate
/// ratio). Requests with |k(s)| < 1e-12 raise SingularPropagatorError.
PropagatorFamily dephasing_propagator_family(const DecoherenceFunction& k);

/// System-plus-environment unitary realization. Two kinds are supported: the
/// diagonal qubit-dephasing dilation built from a momentum grid, and a
/// generic model given by an arbitrary one-parameter unitary group and
/// environment state.
class DilationModel {
 public:
  static DilationModel qubit_dephasing(const NumericGridSpectrum& grid);
  static DilationModel generic(int system_dim, int env_dim,
                               std::function<Matrix(double)> global_unitary,
                               Matrix env_state);

  int system_dim() const { return system_dim_; }
  int env_dim() const { return env_dim_; }
  bool is_diagonal_grid() const { return grid_.has_value(); }
  const NumericGridSpectrum& grid() const;

  /// Dense global unitary U(t) on system (x) environment. For the grid kind
  /// this is diagonal with phases e^{-i l p_j t}, l = +1 for system index 0
  /// and l = -1 for index 1, so the coherence <\,-1|rho_S|+1> picks up the
  /// factor sum_j w_j e^{2 i p_j t}.
  Matrix global_unitary(double t) const;

  /// Dense environment state (grid kind: |phi><phi| with amplitudes
  /// sqrt(w_j)).
  Matrix env_state() const;

  /// Reduced off-diagonal multiplier of the grid kind, sum_j w_j e^{2 i p_j t}.
  Complex reduced_offdiagonal_factor(double t) const;

 private:
  DilationModel() = default;
  int system_dim_ = 0;
  int env_dim_ = 0;
  std::optional<NumericGridSpectrum> grid_;
  std::function<Matrix(double)> unitary_;
  Matrix env_state_;
};

/// Builds the qubit-dephasing dilation from a sampled momentum grid.
DilationModel dilation_unitary(const NumericGridSpectrum& spectrum);

}  // namespace qmts
