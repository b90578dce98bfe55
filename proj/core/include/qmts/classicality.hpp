#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qmts/multitime.hpp"

namespace qmts {

/// Grid-relative verdicts. A violation on a finite grid is a certificate;
/// satisfaction only says no violation was found on the sampled records.
/// Residuals between the satisfaction and violation thresholds are flagged
/// inconclusive rather than silently rounded either way.
enum class Verdict { satisfied, violated, inconclusive };

std::string to_string(Verdict v);

struct ClassicalityReport {
  int level = 0;
  std::string grid_description;
  double max_residual = 0.0;
  Verdict verdict = Verdict::satisfied;
  MeasurementRecord witness;
  int witness_marginalized_slot = 0;  // 1-based, chronological

  bool is_jcl_on_grid() const { return verdict == Verdict::satisfied; }
  nlohmann::json to_json(const MeasurementBasis& basis) const;
};

struct MarkovianityReport {
  int level = 0;
  std::string grid_description;
  double max_residual = 0.0;
  Verdict verdict = Verdict::satisfied;
  MeasurementRecord witness;

  bool is_jm_on_grid() const { return verdict == Verdict::satisfied; }
  nlohmann::json to_json(const MeasurementBasis& basis) const;
};

/// |sum_{x_k} Q_n(record) - Q_{n-1}(record without slot k)|; k is 1-based
/// and chronological, 1 <= k <= n, n > 1.
double kolmogorov_residual(const JointDistribution& hierarchy,
                           const MeasurementRecord& record, int marginalized_slot);

/// Enumerates every record of level 2..j with strictly increasing times from
/// the grid, all outcome strings and all marginalized slots, and reports the
/// maximal marginalization residual. Ties are broken toward the
/// lexicographically smallest witness so reports are reproducible. Throws
/// std::invalid_argument when the enumeration would exceed record_cap.
ClassicalityReport is_jcl(const JointDistribution& hierarchy, int j,
                          const std::vector<double>& grid,
                          double tolerance = tol::satisfied,
                          std::size_t record_cap = 2'000'000);

/// Max |Q_exact - Q_qrt| over all records of level 1..j with strictly
/// increasing grid times; both hierarchies must share the basis dimension.
MarkovianityReport is_jm(const JointDistribution& exact, const JointDistribution& qrt,
                         int j, const std::vector<double>& grid,
                         double tolerance = tol::satisfied,
                         std::size_t record_cap = 2'000'000);

/// |Q_{1|1}{x,t|x0,0} - sum_y Q_{1|1}{x,t-s|y,0} Q_{1|1}{y,s|x0,0}|,
/// the homogeneous composition-law residual of the one-time conditionals.
double chapman_kolmogorov_residual(const Superoperator& lindbladian,
                                   const MeasurementBasis& basis, int x, int x0,
                                   double t, double s);

Verdict classify_residual(double residual, double satisfied_tol = tol::satisfied,
                          double violated_tol = tol::violated);

}  // namespace qmts
