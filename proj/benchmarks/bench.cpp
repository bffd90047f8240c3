#include <benchmark/benchmark.h>

#include "kac/graph.hpp"
#include "kac/kl.hpp"
#include "kac/reduction.hpp"

namespace {

const char* kExample = "rho:7,5,4,2,1|1,2,4,7,8,10";

void BM_EnumeratePaths(benchmark::State& state) {
  kac::WeightDiagram d = kac::diagram_of(kac::parse_weight(kExample));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kac::enumerate_paths(d));
  }
}
BENCHMARK(BM_EnumeratePaths);

void BM_BuildGraph(benchmark::State& state) {
  kac::Weight w = kac::parse_weight(kExample);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kac::build_graph(w));
  }
}
BENCHMARK(BM_BuildGraph);

void BM_KlMatrix(benchmark::State& state) {
  kac::Weight w = kac::parse_weight(kExample);
  for (auto _ : state) {
    kac::ClosurePoset s = kac::closure_set(w, 2);
    benchmark::DoNotOptimize(kac::kl_matrix(s));
  }
}
BENCHMARK(BM_KlMatrix);

void BM_BlockInvariance(benchmark::State& state) {
  kac::Weight w = kac::parse_weight(kExample);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kac::check_block_invariance(w));
  }
}
BENCHMARK(BM_BlockInvariance);

}  // namespace

BENCHMARK_MAIN();
