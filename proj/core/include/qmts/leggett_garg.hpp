#pragma once

#include <vector>

#include "qmts/multitime.hpp"

namespace qmts {

/// One evaluation of the temporal inequality
/// |2 C_X(t,0) - C_X(2t,0)| <= <X(0)> for a dichotomic observable with
/// values {0, 1}.
struct LgtiResult {
  double t = 0.0;
  double c_t = 0.0;
  double c_2t = 0.0;
  double x0_mean = 0.0;
  double residual = 0.0;  // |2 c_t - c_2t| - x0_mean
  bool violated = false;  // residual > tolerance
};

/// C_X(t, 0) = sum Q2{x,t; x0,0} x x0 = Q2{1,t; 1,0} for {0,1}-valued X.
/// one_outcome is the basis index carrying the value 1; the hierarchy's
/// basis must be dichotomic. The initial state is the one bound into the
/// hierarchy.
double correlation(const JointDistribution& hierarchy, int one_outcome, double t);

LgtiResult lgti_residual(const JointDistribution& hierarchy, int one_outcome, double t,
                         double tolerance = tol::satisfied);

std::vector<LgtiResult> lgti_scan(const JointDistribution& hierarchy, int one_outcome,
                                  const std::vector<double>& grid,
                                  double tolerance = tol::satisfied);

}  // namespace qmts
