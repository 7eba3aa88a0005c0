#include <benchmark/benchmark.h>

#include "fcad/capacities.hpp"
#include "fcad/covariance.hpp"
#include "fcad/entropy.hpp"

using namespace fcad;

static void BM_HermitianEigenvalues(benchmark::State& state) {
  const ComplexMatrix rho = random_density(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigenvalues(rho));
}
BENCHMARK(BM_HermitianEigenvalues)->Arg(4)->Arg(16)->Arg(32);

static void BM_FcApply(benchmark::State& state) {
  const QuantumChannel ch = fc_channel(Transmissivity(0.6));
  const ComplexMatrix rho = random_density(4, 2);
  for (auto _ : state) benchmark::DoNotOptimize(apply(ch, rho));
}
BENCHMARK(BM_FcApply);

static void BM_CoherentInfo(benchmark::State& state) {
  const ComplexMatrix rho = random_density(4, 3);
  for (auto _ : state) benchmark::DoNotOptimize(coherent_info(Transmissivity(0.6), rho));
}
BENCHMARK(BM_CoherentInfo);

static void BM_C1ClosedForm(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(c1(Transmissivity(0.6)));
}
BENCHMARK(BM_C1ClosedForm)->Unit(benchmark::kMicrosecond);

static void BM_C1ViaOptimization(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(c1_via_optimization(Transmissivity(0.6)));
}
BENCHMARK(BM_C1ViaOptimization)->Unit(benchmark::kMillisecond);

static void BM_CapacityPoint(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(capacity_point(Transmissivity(0.6)));
}
BENCHMARK(BM_CapacityPoint)->Unit(benchmark::kMillisecond);

static void BM_CheckDegradability(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_degradability(Transmissivity(0.75), 100, 1, 1e-12));
  }
}
BENCHMARK(BM_CheckDegradability)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
