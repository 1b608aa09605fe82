// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "triwell/kernels.hpp"
#include "triwell/oracle.hpp"

namespace {

using namespace triwell;

std::vector<double> beta_grid(const DimensionlessWell& well, int n) {
  std::vector<double> betas(static_cast<std::size_t>(n));
  const double top = std::sqrt(well.vbar0());
  for (int i = 0; i < n; ++i) betas[static_cast<std::size_t>(i)] = top * i / (n - 1);
  return betas;
}

template <Execution E>
void BM_SampleResiduals(benchmark::State& state) {
  const DimensionlessWell well(40.0);
  const auto betas = beta_grid(well, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto f = kernels::sample_residuals(E, well, Parity::even, betas);
    benchmark::DoNotOptimize(f.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <Execution E>
void BM_BisectEigenvalues(benchmark::State& state) {
  const DimensionlessWell well(40.0);
  const FdOperator op = make_fd_operator(well, 8.0, state.range(0));
  for (auto _ : state) {
    auto e = kernels::bisect_eigenvalues(E, op, 3, -41.0, -1e-12, kOracleBisectionTol);
    benchmark::DoNotOptimize(e.data());
  }
}

template <Execution E>
void BM_OracleSpectrum(benchmark::State& state) {
  const DimensionlessWell well(25.0);
  for (auto _ : state) {
    auto s = oracle_spectrum(well, E);
    benchmark::DoNotOptimize(s.eigenvalues.data());
  }
}

}  // namespace

BENCHMARK(BM_SampleResiduals<Execution::serial>)->Arg(256)->Arg(4096);
BENCHMARK(BM_SampleResiduals<Execution::parallel>)->Arg(256)->Arg(4096);
BENCHMARK(BM_BisectEigenvalues<Execution::serial>)->Arg(4001)->Arg(16001);
BENCHMARK(BM_BisectEigenvalues<Execution::parallel>)->Arg(4001)->Arg(16001);
BENCHMARK(BM_OracleSpectrum<Execution::serial>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleSpectrum<Execution::parallel>)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
