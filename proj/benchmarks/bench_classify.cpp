#include <benchmark/benchmark.h>

#include "cohom/cross/cross.hpp"
#include "cohom/wallach/wallach.hpp"

using namespace cohom;

namespace {

void BM_ClassifyAll(benchmark::State& state) {
  const auto& cat = catalog::Catalog::builtin();
  for (auto _ : state) benchmark::DoNotOptimize(cross::classify_all(cat));
}
BENCHMARK(BM_ClassifyAll)->Unit(benchmark::kMillisecond);

void BM_IsotropyInvariants(benchmark::State& state) {
  const auto spaces = homogeneous::cross_catalog();
  for (auto _ : state)
    for (const auto& c : spaces) benchmark::DoNotOptimize(cross::isotropy_invariants(c));
  state.counters["spaces"] = static_cast<double>(spaces.size());
}
BENCHMARK(BM_IsotropyInvariants)->Unit(benchmark::kMillisecond);

void BM_WallachFilter(benchmark::State& state) {
  const int n_max = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(wallach::wallach_filter(n_max));
}
BENCHMARK(BM_WallachFilter)->Arg(4)->Arg(8)->Arg(12);

void BM_SuRowCandidates(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(wallach::su_row_candidates(m));
}
BENCHMARK(BM_SuRowCandidates)->DenseRange(3, 7);

}  // namespace
