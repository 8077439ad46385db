#include <benchmark/benchmark.h>

#include "trirealize/patterns.hpp"

using namespace trirealize;

namespace {

void BM_EnumeratePatterns(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_patterns(n));
}
BENCHMARK(BM_EnumeratePatterns)->DenseRange(3, 8)->Unit(benchmark::kMillisecond);

}  // namespace
