#pragma once

#include <functional>
#include <vector>

#include "qmts/dynamics.hpp"
#include "qmts/errors.hpp"
#include "qmts/operators.hpp"

namespace qmts {

/// Ordered measurement record (x_1, t_1; ...; x_n, t_n) with nondecreasing
/// times; outcomes are indices into the measurement basis.
struct MeasurementRecord {
  std::vector<double> times;
  std::vector<int> outcomes;

  MeasurementRecord() = default;
  MeasurementRecord(std::vector<double> ts, std::vector<int> xs);
  std::size_t size() const { return times.size(); }

  /// Record without slot k (1-based, chronological).
  MeasurementRecord without_slot(int k) const;
  MeasurementRecord prefix(std::size_t n) const;
};

/// A hierarchy of joint probability distributions: one evaluator covering
/// every level, the level being the record length. Evaluators are pure
/// functions of the record and safe to call concurrently.
class JointDistribution {
 public:
  JointDistribution(MeasurementBasis basis,
                    std::function<double(const MeasurementRecord&)> evaluator);

  double operator()(const MeasurementRecord& record) const;
  const MeasurementBasis& basis() const { return basis_; }

 private:
  MeasurementBasis basis_;
  std::function<double(const MeasurementRecord&)> evaluator_;
};

/// Exact joint probability Tr{P_xn U_{tn - tn-1} ... P_x1 U_t1 rho(0)} with
/// system-local projectors on the global space. rho0 may be a system state
/// (tensored with the model's environment state) or a global state. For
/// diagonal-grid dilations the computation decomposes exactly over
/// environment sectors, making large grids cheap.
double joint_prob_exact(const DilationModel& model, const DensityMatrix& rho0,
                        const MeasurementBasis& basis, const MeasurementRecord& record);

/// Regression-hierarchy probability
/// tr{P_xn e^{L (tn - tn-1)} ... P_x1 e^{L t1} rho0}.
double joint_prob_markov(const DensityMatrix& rho0, const Superoperator& lindbladian,
                         const MeasurementBasis& basis, const MeasurementRecord& record);

/// Same with general divisible propagators:
/// tr{P_xn Lambda(t_n, t_{n-1}) ... P_x1 Lambda(t_1, 0) rho0}.
double joint_prob_qrt_general(const DensityMatrix& rho0, const PropagatorFamily& family,
                              const MeasurementBasis& basis, const MeasurementRecord& record);

JointDistribution exact_hierarchy(DilationModel model, DensityMatrix rho0,
                                  MeasurementBasis basis);
JointDistribution markov_hierarchy(Superoperator lindbladian, DensityMatrix rho0,
                                   MeasurementBasis basis);
JointDistribution qrt_hierarchy(PropagatorFamily family, DensityMatrix rho0,
                                MeasurementBasis basis);

/// Exact hierarchy of the qubit dephasing model for an analytic decoherence
/// function: every joint probability is a finite combination sum_m c_m k(a_m)
/// with phase arguments a_m built from the record times, so the evaluation is
/// exact up to roundoff (no discretization). Used for the non-regression
/// ("exact") side wherever 1e-9-level agreement is asserted.
JointDistribution dephasing_exact_hierarchy(DecoherenceFunction k, DensityMatrix rho0,
                                            MeasurementBasis basis);

/// Q_{k+n} / Q_n; throws ZeroProbabilityHistoryError when joint_lo <= 0.
double conditional_prob(double joint_hi, double joint_lo);

/// Q_{1|1}{x, t | x0, 0} = tr{P_x e^{L t}[ |psi_x0><psi_x0| ]}.
double conditional_1_1(const Superoperator& lindbladian, const MeasurementBasis& basis,
                       int x, int x0, double t);

/// |Q_{1|n}(x_{n+1}, t_{n+1} | full history) - Q_{1|1}(x_{n+1}, t_{n+1} |
/// x_n, t_n)| for a record with n+1 points. Vanishes identically for
/// regression hierarchies.
double markov_condition_residual(const JointDistribution& hierarchy,
                                 const MeasurementRecord& record);

/// Product reconstruction Q_n = prod_k Q_{1|1} * Q_1 from the one-time data
/// of a Lindblad generator; equals joint_prob_markov when rho0 is diagonal in
/// the basis.
double chain_rule_reconstruct(const DensityMatrix& rho0, const Superoperator& lindbladian,
                              const MeasurementBasis& basis, const MeasurementRecord& record);

}  // namespace qmts
