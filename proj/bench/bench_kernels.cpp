#include <benchmark/benchmark.h>

#include "geobound/census/census.hpp"
#include "geobound/complex/canonical_code.hpp"
#include "geobound/graphs/graph.hpp"

using namespace geobound;

namespace {

PairingComplex sample_manifold(Family fam, int n) {
  const FamilyContext& ctx = family_context(fam);
  for (const Graph& g : enumerate_regular(n))
    if (auto f = one_factorization(g); !f.empty()) return build_manifold(f[0], ctx.block).complex;
  return {};
}

void BM_canonical_code(benchmark::State& state) {
  static const PairingComplex m = sample_manifold(Family::arithmetic, 8);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_code(m));
}

void BM_canonical_code_serial(benchmark::State& state) {
  static const PairingComplex m = sample_manifold(Family::arithmetic, 8);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_code_serial(m));
}

void BM_enumerate_regular(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_regular(int(state.range(0))));
}

void BM_enumerate_regular_serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_regular_serial(int(state.range(0))));
}

}  // namespace

BENCHMARK(BM_canonical_code)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_canonical_code_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_enumerate_regular)->Arg(9)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_enumerate_regular_serial)->Arg(9)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
