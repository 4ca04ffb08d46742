#include <benchmark/benchmark.h>

#include "branchlab/branchlab.hpp"

using namespace branchlab;

namespace {

void BM_LambdaGrid(benchmark::State& state) {
  ShapeIntegrand box = [](const ContinuousShape& s) { return s.l[0] <= 1 && s.l[1] <= 1 ? 1.0 : 0.0; };
  for (auto _ : state)
    benchmark::DoNotOptimize(lambdaIntegral(2, box, 1.0, Integration::grid(static_cast<int>(state.range(0)))).value);
}
BENCHMARK(BM_LambdaGrid)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_LambdaMonteCarlo(benchmark::State& state) {
  ShapeIntegrand box = [](const ContinuousShape& s) { return s.l[0] <= 1 && s.l[1] <= 1 ? 1.0 : 0.0; };
  for (auto _ : state)
    benchmark::DoNotOptimize(
        lambdaIntegral(2, box, 1.0, Integration::monteCarlo(static_cast<std::size_t>(state.range(0)), 1)).value);
}
BENCHMARK(BM_LambdaMonteCarlo)->Arg(100'000)->Unit(benchmark::kMillisecond);

void BM_SampleCpp(benchmark::State& state) {
  const double eps = 1.0 / static_cast<double>(state.range(0));
  Rng rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(sampleCpp(eps, rng).atoms.size());
}
BENCHMARK(BM_SampleCpp)->Arg(100)->Arg(1000);

void BM_CppMonomial(benchmark::State& state) {
  LimitQuery q{2, 1.0, {1.0}, [](const DistanceMatrix& d, const std::vector<int>&) { return d(1, 2) >= 1.0 ? 1.0 : 0.0; },
               1.0};
  CppMonteCarloOptions o;
  o.samples = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cppMonomialMonteCarlo(q, o).value);
}
BENCHMARK(BM_CppMonomial)->Arg(10'000)->Unit(benchmark::kMillisecond);

void BM_ContourTree(benchmark::State& state) {
  Rng rng(3);
  const auto path = sampleExcursion(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(contourTree(path, 1.0 / static_cast<double>(path.size())).size());
}
BENCHMARK(BM_ContourTree)->Arg(1'000)->Arg(10'000);

void BM_KolmogorovProfile(benchmark::State& state) {
  const Model m = models::twoTypeAsymmetric();
  for (auto _ : state) benchmark::DoNotOptimize(kolmogorovProfile(m, {static_cast<int>(state.range(0))}).size());
}
BENCHMARK(BM_KolmogorovProfile)->Arg(10'000);

}  // namespace

BENCHMARK_MAIN();
