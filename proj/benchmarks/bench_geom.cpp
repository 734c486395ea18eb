#include <benchmark/benchmark.h>

#include "cohom/geom/geom.hpp"

using namespace cohom::geom;

namespace {

void BM_GeometrySuite(benchmark::State& state) {
  const auto suite = load_models(default_models_path());
  for (auto _ : state) benchmark::DoNotOptimize(run_geometry_suite(suite));
}
BENCHMARK(BM_GeometrySuite)->Unit(benchmark::kMillisecond);

void BM_SingleCheck(benchmark::State& state, const char* id) {
  const auto suite = load_models(default_models_path());
  for (auto _ : state) benchmark::DoNotOptimize(run_geometry_suite(suite, {id}));
}
BENCHMARK_CAPTURE(BM_SingleCheck, veronese, "veronese-rp2-s4")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SingleCheck, cp2_in_s7, "cp2-in-s7")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SingleCheck, concavity, "concavity-s4")->Unit(benchmark::kMillisecond);

}  // namespace
