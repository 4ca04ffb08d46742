#include <benchmark/benchmark.h>

#include "branchlab/branchlab.hpp"

using namespace branchlab;

namespace {

const Model& symmetric() {
  static const Model m = models::twoTypeSymmetric();
  return m;
}

void BM_EnumerateShapes(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0)), R = static_cast<int>(state.range(1));
  for (auto _ : state) {
    std::uint64_t n = 0;
    forEachShape(k, R, [&](const TreeShape&) { ++n; });
    benchmark::DoNotOptimize(n);
  }
  state.counters["shapes"] = static_cast<double>(countShapes(k, R));
}
BENCHMARK(BM_EnumerateShapes)->Args({2, 40})->Args({3, 10})->Args({3, 20});

void BM_Bruteforce(benchmark::State& state) {
  const int R = static_cast<int>(state.range(0));
  MomentQuery q{2, 0, functionals::heightAtMost(R), R};
  for (auto _ : state) benchmark::DoNotOptimize(momentBruteforce(symmetric(), q, R, 100'000'000));
}
BENCHMARK(BM_Bruteforce)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_ManyToFew(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0)), R = static_cast<int>(state.range(1));
  const SpineKernel kernel = SpineKernel::build(symmetric(), PsiPreset::Harmonic);
  MomentQuery q{k, 0, functionals::heightAtMost(R), R};
  for (auto _ : state) benchmark::DoNotOptimize(momentManyToFew(kernel, q));
}
BENCHMARK(BM_ManyToFew)->Args({2, 3})->Args({3, 3})->Args({2, 10})->Args({3, 6})->Unit(benchmark::kMillisecond);

void BM_Recursive(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0)), R = static_cast<int>(state.range(1));
  const SpineKernel kernel = SpineKernel::build(symmetric(), PsiPreset::Harmonic);
  const ProductSum f = heightIndicatorProducts(k, R, {1.0, 1.0});
  for (auto _ : state) benchmark::DoNotOptimize(momentRecursive(kernel, 0, f));
}
BENCHMARK(BM_Recursive)->Args({2, 3})->Args({3, 3})->Args({2, 10})->Args({3, 6})->Unit(benchmark::kMillisecond);

void BM_RescaledSecondMoment(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SpineKernel kernel = SpineKernel::build(models::twoTypeAsymmetric(), PsiPreset::Harmonic);
  QEvaluator q(kernel, true);
  ContinuousFunctional F = [](const ContinuousShape& s, const std::vector<int>&) {
    return s.l[0] <= 1 + 1e-12 && s.l[1] <= 1 + 1e-12 ? 1.0 : 0.0;
  };
  for (auto _ : state) benchmark::DoNotOptimize(rescaledMoment(q, 2, F, n, 0, 1.0));
}
BENCHMARK(BM_RescaledSecondMoment)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_Simulate(benchmark::State& state) {
  const Model m = models::twoTypeAsymmetric();
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(simulate(m, 0, static_cast<int>(state.range(0)), ++seed).tree.size());
}
BENCHMARK(BM_Simulate)->Arg(10)->Arg(50);

}  // namespace

BENCHMARK_MAIN();
