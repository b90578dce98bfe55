#include <benchmark/benchmark.h>

#include <cmath>

#include "qmts/qmts.hpp"

using namespace qmts;

namespace {

Superoperator random_lindbladian_superop(int d) {
  Rng rng(97);
  return lindbladian_superoperator(random_lindbladian(rng, d));
}

void BM_Propagate(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const Superoperator l = random_lindbladian_superop(d);
  double t = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(propagate(l, t));
    t += 1e-6;  // defeat any memoization, exercise a fresh exponential
  }
}
BENCHMARK(BM_Propagate)->Arg(2)->Arg(4)->Arg(8);

void BM_MarkovJointProbability(benchmark::State& state) {
  Rng rng(98);
  const Superoperator l = random_lindbladian_superop(2);
  const MeasurementBasis z = MeasurementBasis::sigma_z();
  const DensityMatrix rho0 = random_density(rng, 2);
  const MeasurementRecord rec({0.3, 0.8, 1.4}, {0, 1, 0});
  for (auto _ : state)
    benchmark::DoNotOptimize(joint_prob_markov(rho0, l, z, rec));
}
BENCHMARK(BM_MarkovJointProbability);

void BM_GridDecoherenceFunction(benchmark::State& state) {
  const DecoherenceFunction k{
      SpectralDensity(default_momentum_grid(LorentzianSpectrum{1.0, 0.0}, 2001))};
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(k(t));
    t += 1e-4;
  }
}
BENCHMARK(BM_GridDecoherenceFunction);

void BM_GridExactHierarchy(benchmark::State& state) {
  Vector plus(2);
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  const auto hier =
      exact_hierarchy(dilation_unitary(default_momentum_grid(LorentzianSpectrum{1.0, 0.0})),
                      DensityMatrix::pure(plus), MeasurementBasis::sigma_x());
  const MeasurementRecord rec({0.4, 0.9, 1.5}, {0, 0, 1});
  for (auto _ : state) benchmark::DoNotOptimize(hier(rec));
}
BENCHMARK(BM_GridExactHierarchy);

void BM_ClassifyMap(benchmark::State& state) {
  Rng rng(99);
  const Superoperator map = propagate(random_lindbladian_superop(2), 0.7);
  const MeasurementBasis b = MeasurementBasis::computational(2);
  for (auto _ : state)
    benchmark::DoNotOptimize(classify_map(map, b, NormConvention::max_entry, 1e-6));
}
BENCHMARK(BM_ClassifyMap);

void BM_CgdWitness(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const Superoperator l = random_lindbladian_superop(d);
  const MeasurementBasis b = MeasurementBasis::computational(d);
  for (auto _ : state)
    benchmark::DoNotOptimize(cgd_witness(l, b, 0.7, 0.4, NormConvention::max_entry));
}
BENCHMARK(BM_CgdWitness)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
