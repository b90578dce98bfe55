#include "qmts/leggett_garg.hpp"

#include <cmath>
#include <stdexcept>

namespace qmts {

namespace {

void check_dichotomic(const JointDistribution& hierarchy, int one_outcome) {
  if (hierarchy.basis().dim() != 2)
    throw std::invalid_argument("LGtI requires a dichotomic observable");
  if (one_outcome != 0 && one_outcome != 1)
    throw std::invalid_argument("one_outcome must be 0 or 1");
}

}  // namespace

double correlation(const JointDistribution& hierarchy, int one_outcome, double t) {
  check_dichotomic(hierarchy, one_outcome);
  if (t < 0.0) throw std::invalid_argument("correlation: t must be nonnegative");
  // With values {0, 1} only the (1, 1) term of sum x x0 Q2 survives.
  MeasurementRecord record({0.0, t}, {one_outcome, one_outcome});
  return hierarchy(record);
}

LgtiResult lgti_residual(const JointDistribution& hierarchy, int one_outcome, double t,
                         double tolerance) {
  check_dichotomic(hierarchy, one_outcome);
  if (t < 0.0) throw std::invalid_argument("lgti_residual: t must be nonnegative");
  LgtiResult r;
  r.t = t;
  r.c_t = correlation(hierarchy, one_outcome, t);
  r.c_2t = correlation(hierarchy, one_outcome, 2.0 * t);
  r.x0_mean = hierarchy(MeasurementRecord({0.0}, {one_outcome}));
  r.residual = std::abs(2.0 * r.c_t - r.c_2t) - r.x0_mean;
  r.violated = r.residual > tolerance;
  return r;
}

std::vector<LgtiResult> lgti_scan(const JointDistribution& hierarchy, int one_outcome,
                                  const std::vector<double>& grid, double tolerance) {
  std::vector<LgtiResult> out;
  out.reserve(grid.size());
  for (double t : grid) out.push_back(lgti_residual(hierarchy, one_outcome, t, tolerance));
  return out;
}

}  // namespace qmts
