#include <benchmark/benchmark.h>

#include "cohom/lie/character.hpp"

using namespace cohom::lie;

namespace {

ReductiveAlgebra alg(const char* s) { return ReductiveAlgebra::simple(SimpleType::parse(s)); }

void BM_Freudenthal(benchmark::State& state, const char* type, Weight hw) {
  const auto a = alg(type);
  for (auto _ : state) benchmark::DoNotOptimize(irreducible_character(a, hw));
}
BENCHMARK_CAPTURE(BM_Freudenthal, B4_spin, "B4", Weight{0, 0, 0, 1});
BENCHMARK_CAPTURE(BM_Freudenthal, F4_26, "F4", Weight{0, 0, 0, 1});
BENCHMARK_CAPTURE(BM_Freudenthal, F4_adjoint, "F4", Weight{1, 0, 0, 0});
BENCHMARK_CAPTURE(BM_Freudenthal, E8_248, "E8", Weight{0, 0, 0, 0, 0, 0, 0, 1});

// Invariants of S^2(V*) (x) V, the quantity the tangent-slice test computes.
void BM_QuadraticInvariants(benchmark::State& state, const char* type, Weight hw) {
  const auto v = irreducible_character(alg(type), hw);
  for (auto _ : state) benchmark::DoNotOptimize(trivial_multiplicity(tensor(sym2_dual(v), v)));
  state.counters["dim"] = static_cast<double>(v.dim());
}
BENCHMARK_CAPTURE(BM_QuadraticInvariants, B3_vector, "B3", Weight{1, 0, 0});
BENCHMARK_CAPTURE(BM_QuadraticInvariants, B4_spin, "B4", Weight{0, 0, 0, 1});
BENCHMARK_CAPTURE(BM_QuadraticInvariants, A3_standard, "A3", Weight{1, 0, 0});

void BM_WeylDimension(benchmark::State& state) {
  const auto a = alg("E8");
  const Weight hw{1, 1, 1, 1, 1, 1, 1, 1};
  for (auto _ : state) benchmark::DoNotOptimize(weyl_dimension(a, hw));
}
BENCHMARK(BM_WeylDimension);

}  // namespace
