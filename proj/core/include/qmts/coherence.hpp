#pragma once

#include <array>
#include <vector>

#include <json.hpp>

#include "qmts/dynamics.hpp"
#include "qmts/superoperator.hpp"

namespace qmts {

/// Residuals of the three operational map classes relative to the dephasing
/// map Delta of a reference basis:
///   ncgd: || Delta L L Delta - Delta L Delta L Delta ||
///   mio:  || L Delta - Delta L Delta ||   (coherence creation)
///   cna:  || Delta L - Delta L Delta ||   (coherence detection)
/// Incoherent (MIO) and coherence-nonactivating maps are subsets of the
/// NCGD maps, so their verdicts imply the NCGD verdict.
struct CoherenceClassification {
  double residual_ncgd = 0.0;
  double residual_mio = 0.0;
  double residual_cna = 0.0;
  NormConvention norm_convention = NormConvention::column_sum;
  double tolerance = tol::violated;
  bool ncgd = true;
  bool mio = true;
  bool cna = true;

  nlohmann::json to_json() const;
};

/// || Delta Lambda(t) Delta Lambda(tau) Delta - Delta Lambda(t + tau) Delta ||
/// for Lambda(u) = e^{L u}. Zero for all (t, tau) iff the dynamics cannot
/// generate and subsequently detect coherence in the basis.
double cgd_witness(const Superoperator& lindbladian, const MeasurementBasis& basis,
                   double t, double tau,
                   NormConvention convention = NormConvention::column_sum);

/// Divisible-evolution version with propagators instead of e^{L u}:
/// || Delta Lambda(t,s) Delta Lambda(s,r) Delta - Delta Lambda(t,r) Delta ||,
/// r <= s <= t.
double cgd_witness_divisible(const PropagatorFamily& family, const MeasurementBasis& basis,
                             double t, double s, double r,
                             NormConvention convention = NormConvention::column_sum);

/// | sum_{y != z} <psi_xt| Lambda(t)[|psi_y><psi_z|] |psi_xt>
///   * <psi_y| Lambda(tau)[|psi_x><psi_x|] |psi_z> |.
/// Vanishing for all (x, xt, t, tau) is equivalent to the dynamics being
/// NCGD.
double lemma1_residual(const Superoperator& lindbladian, const MeasurementBasis& basis,
                       int x, int x_tilde, double t, double tau);

/// Classifies a single trace-preserving map against the three classes at the
/// given tolerance.
CoherenceClassification classify_map(const Superoperator& map, const MeasurementBasis& basis,
                                     NormConvention convention = NormConvention::column_sum,
                                     double tolerance = tol::violated);

/// Classification of Lambda^n for n = 1..n_max (repeated composition).
std::vector<CoherenceClassification> iterate_map_classification(
    const Superoperator& map, const MeasurementBasis& basis, int n_max,
    NormConvention convention = NormConvention::column_sum,
    double tolerance = tol::violated);

struct CgdSweepRow {
  double t = 0.0;
  double s = 0.0;
  double r = 0.0;
  double witness = 0.0;
  bool singular = false;  // flagged, not dropped
};

/// Deterministic witness table over (t, s, r) triples; rows where the family
/// is singular are kept and flagged.
std::vector<CgdSweepRow> cgd_amount_sweep(const PropagatorFamily& family,
                                          const MeasurementBasis& basis,
                                          const std::vector<std::array<double, 3>>& grid,
                                          NormConvention convention = NormConvention::column_sum);

}  // namespace qmts
