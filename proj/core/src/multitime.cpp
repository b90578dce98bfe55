#include "qmts/multitime.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace qmts {

MeasurementRecord::MeasurementRecord(std::vector<double> ts, std::vector<int> xs)
    : times(std::move(ts)), outcomes(std::move(xs)) {
  if (times.size() != outcomes.size())
    throw std::invalid_argument("MeasurementRecord: one outcome per time");
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (times[i] < 0.0) throw std::invalid_argument("MeasurementRecord: negative time");
    if (i > 0 && times[i] < times[i - 1])
      throw std::invalid_argument("MeasurementRecord: times must be nondecreasing");
  }
}

MeasurementRecord MeasurementRecord::without_slot(int k) const {
  if (k < 1 || static_cast<std::size_t>(k) > size())
    throw std::invalid_argument("MeasurementRecord: slot out of range");
  MeasurementRecord r;
  for (std::size_t i = 0; i < size(); ++i) {
    if (i + 1 == static_cast<std::size_t>(k)) continue;
    r.times.push_back(times[i]);
    r.outcomes.push_back(outcomes[i]);
  }
  return r;
}

MeasurementRecord MeasurementRecord::prefix(std::size_t n) const {
  if (n > size()) throw std::invalid_argument("MeasurementRecord: prefix too long");
  MeasurementRecord r;
  r.times.assign(times.begin(), times.begin() + n);
  r.outcomes.assign(outcomes.begin(), outcomes.begin() + n);
  return r;
}

JointDistribution::JointDistribution(MeasurementBasis basis,
                                     std::function<double(const MeasurementRecord&)> evaluator)
    : basis_(std::move(basis)), evaluator_(std::move(evaluator)) {}

double JointDistribution::operator()(const MeasurementRecord& record) const {
  return evaluator_(record);
}

namespace {

void validate_record(const MeasurementBasis& basis, const MeasurementRecord& record) {
  for (std::size_t i = 0; i < record.size(); ++i) {
    if (record.outcomes[i] < 0 || record.outcomes[i] >= basis.dim())
      throw std::invalid_argument("record outcome out of basis range");
    if (i > 0 && record.times[i] < record.times[i - 1])
      throw std::invalid_argument("record times must be nondecreasing");
  }
}

/// Sector path for diagonal-grid dilations: the global unitary is diagonal
/// in the environment index and the projectors are system-local, so each
/// environment sector evolves independently and only the diagonal sectors
/// reach the final trace.
double exact_grid_path(const DilationModel& model, const DensityMatrix& rho0,
                       const MeasurementBasis& basis, const MeasurementRecord& record) {
  const int m = model.env_dim();
  const auto& nodes = model.grid().nodes();
  const bool global_state = rho0.dim() == 2 * m;

  double total = 0.0;
  for (int j = 0; j < m; ++j) {
    Eigen::Matrix2cd sigma;
    if (global_state) {
      sigma << rho0.matrix()(j, j), rho0.matrix()(j, m + j),
          rho0.matrix()(m + j, j), rho0.matrix()(m + j, m + j);
    } else {
      sigma = nodes[j].weight * rho0.matrix();
    }
    double prev_t = 0.0;
    Complex amp = 1.0;  // trace of sigma after the latest projection
    for (std::size_t i = 0; i < record.size(); ++i) {
      const double dt = record.times[i] - prev_t;
      prev_t = record.times[i];
      const Complex ph = std::exp(Complex(0.0, -nodes[j].p * dt));
      // D = diag(ph, conj(ph)); sigma -> D sigma D^dagger
      sigma(0, 1) *= ph * ph;
      sigma(1, 0) *= std::conj(ph) * std::conj(ph);
      const Vector& psi = basis.vector(record.outcomes[i]);
      amp = (psi.adjoint() * sigma * psi)(0, 0);
      sigma = amp * (psi * psi.adjoint());
    }
    total += amp.real();
  }
  return total;
}

double exact_dense_path(const DilationModel& model, const DensityMatrix& rho0,
                        const MeasurementBasis& basis, const MeasurementRecord& record) {
  const int ds = model.system_dim();
  const int de = model.env_dim();
  Matrix rho;
  if (rho0.dim() == ds * de) {
    rho = rho0.matrix();
  } else {
    const Matrix env = model.env_state();
    rho = Matrix::Zero(ds * de, ds * de);
    for (int a = 0; a < ds; ++a)
      for (int b = 0; b < ds; ++b)
        rho.block(a * de, b * de, de, de) = rho0.matrix()(a, b) * env;
  }
  const Matrix id_env = Matrix::Identity(de, de);
  double prev_t = 0.0;
  for (std::size_t i = 0; i < record.size(); ++i) {
    const double dt = record.times[i] - prev_t;
    prev_t = record.times[i];
    const Matrix u = model.global_unitary(dt);
    rho = u * rho * u.adjoint();
    const Matrix p = basis.projector(record.outcomes[i]);
    Matrix pg = Matrix::Zero(ds * de, ds * de);
    for (int a = 0; a < ds; ++a)
      for (int b = 0; b < ds; ++b)
        if (std::abs(p(a, b)) > 0.0) pg.block(a * de, b * de, de, de) = p(a, b) * id_env;
    rho = pg * rho * pg;
  }
  return rho.trace().real();
}

}  // namespace

double joint_prob_exact(const DilationModel& model, const DensityMatrix& rho0,
                        const MeasurementBasis& basis, const MeasurementRecord& record) {
  if (basis.dim() != model.system_dim())
    throw std::invalid_argument("joint_prob_exact: basis dimension mismatch");
  if (rho0.dim() != model.system_dim() && rho0.dim() != model.system_dim() * model.env_dim())
    throw std::invalid_argument("joint_prob_exact: rho0 must be a system or global state");
  validate_record(basis, record);
  if (record.size() == 0) return 1.0;
  if (model.is_diagonal_grid()) return exact_grid_path(model, rho0, basis, record);
  return exact_dense_path(model, rho0, basis, record);
}

double joint_prob_markov(const DensityMatrix& rho0, const Superoperator& lindbladian,
                         const MeasurementBasis& basis, const MeasurementRecord& record) {
  if (lindbladian.dim() != basis.dim() || rho0.dim() != basis.dim())
    throw std::invalid_argument("joint_prob_markov: dimension mismatch");
  validate_record(basis, record);
  Matrix sigma = rho0.matrix();
  double prev_t = 0.0;
  for (std::size_t i = 0; i < record.size(); ++i) {
    const double dt = record.times[i] - prev_t;
    prev_t = record.times[i];
    sigma = propagate(lindbladian, dt).apply(sigma);
    const Matrix p = basis.projector(record.outcomes[i]);
    sigma = p * sigma * p;
  }
  return sigma.trace().real();
}

double joint_prob_qrt_general(const DensityMatrix& rho0, const PropagatorFamily& family,
                              const MeasurementBasis& basis, const MeasurementRecord& record) {
  if (family.dim() != basis.dim() || rho0.dim() != basis.dim())
    throw std::invalid_argument("joint_prob_qrt_general: dimension mismatch");
  validate_record(basis, record);
  Matrix sigma = rho0.matrix();
  double prev_t = 0.0;
  for (std::size_t i = 0; i < record.size(); ++i) {
    sigma = family(record.times[i], prev_t).apply(sigma);
    prev_t = record.times[i];
    const Matrix p = basis.projector(record.outcomes[i]);
    sigma = p * sigma * p;
  }
  return sigma.trace().real();
}

JointDistribution exact_hierarchy(DilationModel model, DensityMatrix rho0,
                                  MeasurementBasis basis) {
  auto eval = [model = std::move(model), rho0 = std::move(rho0),
               basis](const MeasurementRecord& record) {
    return joint_prob_exact(model, rho0, basis, record);
  };
  return JointDistribution(basis, std::move(eval));
}

JointDistribution markov_hierarchy(Superoperator lindbladian, DensityMatrix rho0,
                                   MeasurementBasis basis) {
  // Propagators for repeated time gaps are memoized; the cache is shared and
  // mutex-guarded so evaluators stay reentrant.
  struct Cache {
    std::mutex mu;
    std::map<double, Matrix> steps;
  };
  auto cache = std::make_shared<Cache>();
  auto eval = [lindbladian = std::move(lindbladian), rho0 = std::move(rho0), basis,
               cache](const MeasurementRecord& record) {
    for (std::size_t i = 0; i < record.size(); ++i)
      if (record.outcomes[i] < 0 || record.outcomes[i] >= basis.dim())
        throw std::invalid_argument("record outcome out of basis range");
    Matrix sigma = rho0.matrix();
    double prev_t = 0.0;
    for (std::size_t i = 0; i < record.size(); ++i) {
      const double dt = record.times[i] - prev_t;
      if (dt < 0.0) throw std::invalid_argument("record times must be nondecreasing");
      prev_t = record.times[i];
      Matrix step;
      {
        std::lock_guard<std::mutex> lock(cache->mu);
        auto it = cache->steps.find(dt);
        if (it == cache->steps.end())
          it = cache->steps.emplace(dt, propagate(lindbladian, dt).matrix()).first;
        step = it->second;
      }
      sigma = devectorize(step * vectorize(sigma));
      const Matrix p = basis.projector(record.outcomes[i]);
      sigma = p * sigma * p;
    }
    return sigma.trace().real();
  };
  return JointDistribution(basis, std::move(eval));
}

JointDistribution qrt_hierarchy(PropagatorFamily family, DensityMatrix rho0,
                                MeasurementBasis basis) {
  struct Cache {
    std::mutex mu;
    std::map<std::pair<double, double>, Matrix> steps;
  };
  auto cache = std::make_shared<Cache>();
  auto eval = [family = std::move(family), rho0 = std::move(rho0), basis,
               cache](const MeasurementRecord& record) {
    Matrix sigma = rho0.matrix();
    double prev_t = 0.0;
    for (std::size_t i = 0; i < record.size(); ++i) {
      if (record.outcomes[i] < 0 || record.outcomes[i] >= basis.dim())
        throw std::invalid_argument("record outcome out of basis range");
      const double t = record.times[i];
      if (t < prev_t) throw std::invalid_argument("record times must be nondecreasing");
      Matrix step;
      {
        std::lock_guard<std::mutex> lock(cache->mu);
        auto key = std::make_pair(t, prev_t);
        auto it = cache->steps.find(key);
        if (it == cache->steps.end())
          it = cache->steps.emplace(key, family(t, prev_t).matrix()).first;
        step = it->second;
      }
      prev_t = t;
      sigma = devectorize(step * vectorize(sigma));
      const Matrix p = basis.projector(record.outcomes[i]);
      sigma = p * sigma * p;
    }
    return sigma.trace().real();
  };
  return JointDistribution(basis, std::move(eval));
}

namespace {

/// One 2x2 entry of the dephasing-model state as a finite phase polynomial:
/// a list of (alpha, c) terms standing for sum_m c_m e^{2 i p alpha_m}, whose
/// environment average is sum_m c_m k(alpha_m).
using PhasePoly = std::map<double, Complex>;

void add_term(PhasePoly& poly, double alpha, Complex c) {
  auto [it, inserted] = poly.emplace(alpha, c);
  if (!inserted) it->second += c;
}

}  // namespace

JointDistribution dephasing_exact_hierarchy(DecoherenceFunction k, DensityMatrix rho0,
                                            MeasurementBasis basis) {
  if (rho0.dim() != 2 || basis.dim() != 2)
    throw std::invalid_argument("dephasing_exact_hierarchy: qubit model only");
  auto eval = [k = std::move(k), rho0, basis](const MeasurementRecord& record) {
    validate_record(basis, record);
    std::array<PhasePoly, 4> state;  // entries (0,0),(0,1),(1,0),(1,1)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        if (rho0.matrix()(i, j) != Complex(0.0)) add_term(state[i * 2 + j], 0.0, rho0.matrix()(i, j));
    double prev_t = 0.0;
    for (std::size_t step = 0; step < record.size(); ++step) {
      const double dt = record.times[step] - prev_t;
      prev_t = record.times[step];
      // Free evolution: <+1|rho|-1> gains e^{-2 i p dt}, its partner the
      // conjugate phase; populations are frozen.
      if (dt != 0.0) {
        PhasePoly up, down;
        for (const auto& [a, c] : state[1]) add_term(up, a - dt, c);
        for (const auto& [a, c] : state[2]) add_term(down, a + dt, c);
        state[1] = std::move(up);
        state[2] = std::move(down);
      }
      const Vector& psi = basis.vector(record.outcomes[step]);
      PhasePoly scalar;  // <psi| rho |psi>
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          const Complex w = std::conj(psi(i)) * psi(j);
          if (w == Complex(0.0)) continue;
          for (const auto& [a, c] : state[i * 2 + j]) add_term(scalar, a, w * c);
        }
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          const Complex w = psi(i) * std::conj(psi(j));
          state[i * 2 + j].clear();
          if (w == Complex(0.0)) continue;
          for (const auto& [a, c] : scalar) add_term(state[i * 2 + j], a, w * c);
        }
    }
    Complex total = 0.0;
    for (const auto& [a, c] : state[0]) total += c * k(a);
    for (const auto& [a, c] : state[3]) total += c * k(a);
    return total.real();
  };
  return JointDistribution(basis, std::move(eval));
}

double conditional_prob(double joint_hi, double joint_lo) {
  if (joint_lo <= 0.0)
    throw ZeroProbabilityHistoryError("conditional probability on a null history");
  return joint_hi / joint_lo;
}

double conditional_1_1(const Superoperator& lindbladian, const MeasurementBasis& basis,
                       int x, int x0, double t) {
  if (t < 0.0) throw std::invalid_argument("conditional_1_1: t must be nonnegative");
  const Matrix evolved = propagate(lindbladian, t).apply(basis.projector(x0));
  const Vector& psi = basis.vector(x);
  return (psi.adjoint() * evolved * psi)(0, 0).real();
}

double markov_condition_residual(const JointDistribution& hierarchy,
                                 const MeasurementRecord& record) {
  const std::size_t n_plus_1 = record.size();
  if (n_plus_1 < 2)
    throw std::invalid_argument("markov_condition_residual: need at least two points");
  const std::size_t n = n_plus_1 - 1;
  const double hi = hierarchy(record);
  const double lo = hierarchy(record.prefix(n));
  MeasurementRecord pair({record.times[n - 1], record.times[n]},
                         {record.outcomes[n - 1], record.outcomes[n]});
  const double q2 = hierarchy(pair);
  const double q1 = hierarchy(pair.prefix(1));
  return std::abs(conditional_prob(hi, lo) - conditional_prob(q2, q1));
}

double chain_rule_reconstruct(const DensityMatrix& rho0, const Superoperator& lindbladian,
                              const MeasurementBasis& basis, const MeasurementRecord& record) {
  if (record.size() == 0) return 1.0;
  validate_record(basis, record);
  MeasurementRecord first({record.times[0]}, {record.outcomes[0]});
  double prob = joint_prob_markov(rho0, lindbladian, basis, first);
  for (std::size_t i = 0; i + 1 < record.size(); ++i) {
    prob *= conditional_1_1(lindbladian, basis, record.outcomes[i + 1], record.outcomes[i],
                            record.times[i + 1] - record.times[i]);
  }
  return prob;
}

}  // namespace qmts
