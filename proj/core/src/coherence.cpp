#include "qmts/coherence.hpp"

#include <cmath>
#include <stdexcept>

#include "qmts/errors.hpp"
#include "qmts/parallel.hpp"

namespace qmts {

nlohmann::json CoherenceClassification::to_json() const {
  return nlohmann::json{{"residual_ncgd", residual_ncgd},
                        {"residual_mio", residual_mio},
                        {"residual_cna", residual_cna},
                        {"norm_convention", to_string(norm_convention)},
                        {"tolerance", tolerance},
                        {"verdicts", {{"ncgd", ncgd}, {"mio", mio}, {"cna", cna}}}};
}

double cgd_witness(const Superoperator& lindbladian, const MeasurementBasis& basis,
                   double t, double tau, NormConvention convention) {
  if (t < 0.0 || tau < 0.0) throw std::invalid_argument("cgd_witness: times must be nonnegative");
  if (lindbladian.dim() != basis.dim())
    throw std::invalid_argument("cgd_witness: dimension mismatch");
  const Superoperator delta = dephasing_superoperator(basis);
  const Superoperator inserted =
      delta * propagate(lindbladian, t) * delta * propagate(lindbladian, tau) * delta;
  const Superoperator direct = delta * propagate(lindbladian, t + tau) * delta;
  return superop_norm(inserted - direct, convention);
}

double cgd_witness_divisible(const PropagatorFamily& family, const MeasurementBasis& basis,
                             double t, double s, double r, NormConvention convention) {
  if (r < 0.0 || s < r || t < s)
    throw std::invalid_argument("cgd_witness_divisible: need 0 <= r <= s <= t");
  if (family.dim() != basis.dim())
    throw std::invalid_argument("cgd_witness_divisible: dimension mismatch");
  const Superoperator delta = dephasing_superoperator(basis);
  const Superoperator inserted = delta * family(t, s) * delta * family(s, r) * delta;
  const Superoperator direct = delta * family(t, r) * delta;
  return superop_norm(inserted - direct, convention);
}

double lemma1_residual(const Superoperator& lindbladian, const MeasurementBasis& basis,
                       int x, int x_tilde, double t, double tau) {
  if (t < 0.0 || tau < 0.0)
    throw std::invalid_argument("lemma1_residual: times must be nonnegative");
  const int d = basis.dim();
  if (x < 0 || x >= d || x_tilde < 0 || x_tilde >= d)
    throw std::invalid_argument("lemma1_residual: outcome out of range");
  const Superoperator lam_t = propagate(lindbladian, t);
  const Matrix evolved_proj = propagate(lindbladian, tau).apply(basis.projector(x));
  const Vector& chi = basis.vector(x_tilde);
  Complex sum = 0.0;
  for (int y = 0; y < d; ++y)
    for (int z = 0; z < d; ++z) {
      if (y == z) continue;
      const Matrix e_yz = basis.vector(y) * basis.vector(z).adjoint();
      const Complex detect = (chi.adjoint() * lam_t.apply(e_yz) * chi)(0, 0);
      const Complex generate =
          (basis.vector(y).adjoint() * evolved_proj * basis.vector(z))(0, 0);
      sum += detect * generate;
    }
  return std::abs(sum);
}

CoherenceClassification classify_map(const Superoperator& map, const MeasurementBasis& basis,
                                     NormConvention convention, double tolerance) {
  if (map.dim() != basis.dim()) throw std::invalid_argument("classify_map: dimension mismatch");
  if (!map.is_trace_preserving(1e-6))
    throw std::invalid_argument("classify_map: map is not trace preserving");
  const Superoperator delta = dephasing_superoperator(basis);
  const Superoperator ld = map * delta;
  const Superoperator dld = delta * ld;
  CoherenceClassification c;
  c.norm_convention = convention;
  c.tolerance = tolerance;
  c.residual_ncgd = superop_norm(delta * map * ld - dld * map * delta, convention);
  c.residual_mio = superop_norm(ld - dld, convention);
  c.residual_cna = superop_norm(delta * map - dld, convention);
  c.ncgd = c.residual_ncgd <= tolerance;
  c.mio = c.residual_mio <= tolerance;
  c.cna = c.residual_cna <= tolerance;
  return c;
}

std::vector<CoherenceClassification> iterate_map_classification(
    const Superoperator& map, const MeasurementBasis& basis, int n_max,
    NormConvention convention, double tolerance) {
  if (n_max < 1) throw std::invalid_argument("iterate_map_classification: n_max must be >= 1");
  std::vector<CoherenceClassification> out;
  out.reserve(n_max);
  Superoperator power = map;
  for (int n = 1; n <= n_max; ++n) {
    out.push_back(classify_map(power, basis, convention, tolerance));
    if (n < n_max) power = power * map;
  }
  return out;
}

std::vector<CgdSweepRow> cgd_amount_sweep(const PropagatorFamily& family,
                                          const MeasurementBasis& basis,
                                          const std::vector<std::array<double, 3>>& grid,
                                          NormConvention convention) {
  std::vector<CgdSweepRow> rows(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    const auto [t, s, r] = grid[i];
    CgdSweepRow row{t, s, r, 0.0, false};
    try {
      row.witness = cgd_witness_divisible(family, basis, t, s, r, convention);
    } catch (const SingularPropagatorError&) {
      row.singular = true;
      row.witness = std::nan("");
    }
    rows[i] = row;
  });
  return rows;
}

}  // namespace qmts
