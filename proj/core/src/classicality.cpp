#include "qmts/classicality.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qmts/parallel.hpp"

namespace qmts {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::satisfied: return "satisfied";
    case Verdict::violated: return "violated";
    default: return "inconclusive";
  }
}

Verdict classify_residual(double residual, double satisfied_tol, double violated_tol) {
  if (residual > violated_tol) return Verdict::violated;
  if (residual <= satisfied_tol) return Verdict::satisfied;
  return Verdict::inconclusive;
}

namespace {

nlohmann::json record_to_json(const MeasurementBasis& basis, const MeasurementRecord& r) {
  std::vector<std::string> labels;
  labels.reserve(r.size());
  for (int x : r.outcomes) labels.push_back(basis.label(x));
  return nlohmann::json{{"times", r.times}, {"outcomes", labels}};
}

std::string describe_grid(const std::vector<double>& grid) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (i) os << ", ";
    os << grid[i];
  }
  os << "}";
  return os.str();
}

/// Strictly increasing time tuples of length n drawn from the (sorted,
/// deduplicated) grid, paired with every outcome string.
template <typename Fn>
void for_each_record(const std::vector<double>& grid, int n, int d, Fn&& fn) {
  std::vector<int> time_idx(n);
  std::vector<int> outcome(n);
  auto emit_outcomes = [&](auto&& self, int slot) -> void {
    if (slot == n) {
      MeasurementRecord r;
      for (int i = 0; i < n; ++i) {
        r.times.push_back(grid[time_idx[i]]);
        r.outcomes.push_back(outcome[i]);
      }
      fn(std::move(r));
      return;
    }
    for (int x = 0; x < d; ++x) {
      outcome[slot] = x;
      self(self, slot + 1);
    }
  };
  auto emit_times = [&](auto&& self, int slot, int start) -> void {
    if (slot == n) {
      emit_outcomes(emit_outcomes, 0);
      return;
    }
    for (int i = start; i < static_cast<int>(grid.size()); ++i) {
      time_idx[slot] = i;
      self(self, slot + 1, i + 1);
    }
  };
  emit_times(emit_times, 0, 0);
}

std::vector<double> sorted_grid(std::vector<double> grid) {
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  for (double t : grid)
    if (t < 0.0) throw std::invalid_argument("grid times must be nonnegative");
  return grid;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

nlohmann::json ClassicalityReport::to_json(const MeasurementBasis& basis) const {
  const char* name = verdict == Verdict::satisfied
                         ? "jCL-on-grid"
                         : verdict == Verdict::violated ? "non-classical" : "inconclusive";
  return nlohmann::json{{"level", level},
                        {"grid", grid_description},
                        {"grid_relative", true},
                        {"max_residual", max_residual},
                        {"verdict", name},
                        {"witness", record_to_json(basis, witness)},
                        {"witness_marginalized_slot", witness_marginalized_slot}};
}

nlohmann::json MarkovianityReport::to_json(const MeasurementBasis& basis) const {
  const char* name = verdict == Verdict::satisfied
                         ? "jM-on-grid"
                         : verdict == Verdict::violated ? "NM" : "inconclusive";
  return nlohmann::json{{"level", level},
                        {"grid", grid_description},
                        {"grid_relative", true},
                        {"max_residual", max_residual},
                        {"verdict", name},
                        {"witness", record_to_json(basis, witness)}};
}

double kolmogorov_residual(const JointDistribution& hierarchy,
                           const MeasurementRecord& record, int marginalized_slot) {
  const int n = static_cast<int>(record.size());
  if (n < 2) throw std::invalid_argument("kolmogorov_residual: need n > 1");
  if (marginalized_slot < 1 || marginalized_slot > n)
    throw std::invalid_argument("kolmogorov_residual: slot out of range");
  const int d = hierarchy.basis().dim();
  double summed = 0.0;
  MeasurementRecord scratch = record;
  for (int x = 0; x < d; ++x) {
    scratch.outcomes[marginalized_slot - 1] = x;
    summed += hierarchy(scratch);
  }
  return std::abs(summed - hierarchy(record.without_slot(marginalized_slot)));
}

ClassicalityReport is_jcl(const JointDistribution& hierarchy, int j,
                          const std::vector<double>& grid, double tolerance,
                          std::size_t record_cap) {
  if (j < 2) throw std::invalid_argument("is_jcl: j must be at least 2");
  const auto times = sorted_grid(grid);
  const int d = hierarchy.basis().dim();

  std::size_t planned = 0;
  for (int n = 2; n <= j; ++n) {
    std::size_t per_level = binomial(times.size(), n) * static_cast<std::size_t>(n);
    for (int i = 0; i < n; ++i) per_level *= static_cast<std::size_t>(d);
    planned += per_level;
  }
  if (planned > record_cap)
    throw std::invalid_argument("is_jcl: grid too large (" + std::to_string(planned) +
                                " residuals exceed the cap)");

  struct Task {
    MeasurementRecord record;
    int slot;
  };
  std::vector<Task> tasks;
  for (int n = 2; n <= j; ++n)
    for_each_record(times, n, d, [&](MeasurementRecord r) {
      for (int k = 1; k <= n; ++k) tasks.push_back({r, k});
    });

  std::vector<double> residuals(tasks.size());
  parallel_for(tasks.size(), [&](std::size_t i) {
    residuals[i] = kolmogorov_residual(hierarchy, tasks[i].record, tasks[i].slot);
  });

  ClassicalityReport report;
  report.level = j;
  report.grid_description = describe_grid(times);
  report.max_residual = 0.0;
  // Tasks are enumerated in lexicographic (level, times, outcomes, slot)
  // order, so keeping the first maximum makes the witness reproducible.
  if (!tasks.empty()) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < tasks.size(); ++i)
      if (residuals[i] > residuals[best]) best = i;
    report.max_residual = residuals[best];
    report.witness = tasks[best].record;
    report.witness_marginalized_slot = tasks[best].slot;
  }
  report.verdict = classify_residual(report.max_residual, tolerance);
  return report;
}

MarkovianityReport is_jm(const JointDistribution& exact, const JointDistribution& qrt,
                         int j, const std::vector<double>& grid, double tolerance,
                         std::size_t record_cap) {
  if (j < 1) throw std::invalid_argument("is_jm: j must be at least 1");
  if (exact.basis().dim() != qrt.basis().dim())
    throw std::invalid_argument("is_jm: hierarchies must share the basis dimension");
  const auto times = sorted_grid(grid);
  const int d = exact.basis().dim();

  std::size_t planned = 0;
  for (int n = 1; n <= j; ++n) {
    std::size_t per_level = binomial(times.size(), n);
    for (int i = 0; i < n; ++i) per_level *= static_cast<std::size_t>(d);
    planned += per_level;
  }
  if (planned > record_cap)
    throw std::invalid_argument("is_jm: grid too large (" + std::to_string(planned) +
                                " records exceed the cap)");

  std::vector<MeasurementRecord> records;
  for (int n = 1; n <= j; ++n)
    for_each_record(times, n, d, [&](MeasurementRecord r) { records.push_back(std::move(r)); });

  std::vector<double> residuals(records.size());
  parallel_for(records.size(), [&](std::size_t i) {
    residuals[i] = std::abs(exact(records[i]) - qrt(records[i]));
  });

  MarkovianityReport report;
  report.level = j;
  report.grid_description = describe_grid(times);
  report.max_residual = 0.0;
  if (!records.empty()) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < records.size(); ++i)
      if (residuals[i] > residuals[best]) best = i;
    report.max_residual = residuals[best];
    report.witness = records[best];
  }
  report.verdict = classify_residual(report.max_residual, tolerance);
  return report;
}

double chapman_kolmogorov_residual(const Superoperator& lindbladian,
                                   const MeasurementBasis& basis, int x, int x0,
                                   double t, double s) {
  if (s < 0.0 || t < s)
    throw std::invalid_argument("chapman_kolmogorov_residual: need 0 <= s <= t");
  const double direct = conditional_1_1(lindbladian, basis, x, x0, t);
  double composed = 0.0;
  for (int y = 0; y < basis.dim(); ++y)
    composed += conditional_1_1(lindbladian, basis, x, y, t - s) *
                conditional_1_1(lindbladian, basis, y, x0, s);
  return std::abs(direct - composed);
}

}  // namespace qmts
