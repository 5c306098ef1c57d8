#include <random>

#include <benchmark/benchmark.h>

#include "fullcover/classify.h"
#include "fullcover/cohom.h"
#include "fullcover/gf2.h"
#include "fullcover/specht.h"

namespace fullcover {
namespace {

void BM_Rank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  gf2::Mat m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m.set(r, c, (rng() & 1) != 0);
  }
  for (auto _ : state) benchmark::DoNotOptimize(gf2::Rank(m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Rank)->RangeMultiplier(2)->Range(64, 1024)->Complexity(benchmark::oNCubed);

void BM_AlphaKernel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gf2::KernelBasis(AlphaMatrix(3, 5, n).mat).dim());
  }
}
BENCHMARK(BM_AlphaKernel)->DenseRange(7, 10);

void BM_CoverTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(CocycleTable::Cover(2, n).IsNormalized());
}
BENCHMARK(BM_CoverTable)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_SplitPropagation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CocycleTable cover = CocycleTable::Cover(2, n);
  const GModule m = GModule::Quotient(gf2::Subspace::Zero(Binomial(n, 2)), 2, n);
  for (auto _ : state) benchmark::DoNotOptimize(Is2Coboundary(cover, m).sat);
}
BENCHMARK(BM_SplitPropagation)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_SplitDense(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CocycleTable cover = CocycleTable::Cover(2, n);
  const GModule m = GModule::Quotient(gf2::Subspace::Zero(Binomial(n, 2)), 2, n);
  for (auto _ : state) benchmark::DoNotOptimize(Is2CoboundaryDense(cover, m).sat);
}
BENCHMARK(BM_SplitDense)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_H1(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GModule m = GModule::Quotient(StandardSubmodule({0, 1}, 2, n).materialized, 2, n);
  for (auto _ : state) benchmark::DoNotOptimize(H1Dim(m).h1_dim());
}
BENCHMARK(BM_H1)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

void BM_Classify(benchmark::State& state) {
  ClassifyOptions options;
  options.compute_h1 = false;
  options.dense_limit = 0;
  for (auto _ : state) benchmark::DoNotOptimize(Classify(3, 5, options).all_pass());
}
BENCHMARK(BM_Classify)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace fullcover

BENCHMARK_MAIN();
