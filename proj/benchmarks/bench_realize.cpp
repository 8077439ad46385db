#include <benchmark/benchmark.h>

#include "trirealize/conditions.hpp"
#include "trirealize/realizer.hpp"
#include "trirealize/theorems.hpp"

using namespace trirealize;

namespace {

void BM_Verdict(benchmark::State& state) {
  const Scenario s = build_quadriceptor(20, 15, 10);
  for (auto _ : state) benchmark::DoNotOptimize(realizability_verdict(s.figure, s.angles));
}
BENCHMARK(BM_Verdict);

void BM_RealizeMorley(benchmark::State& state) {
  const Scenario s = build_morley_classic(100, 40, 40);
  for (auto _ : state) benchmark::DoNotOptimize(realize(s.figure, s.angles));
}
BENCHMARK(BM_RealizeMorley);

void BM_RealizeHexagon(benchmark::State& state) {
  const Scenario s = build_morley_hexagon(150, 100, 90);
  for (auto _ : state) benchmark::DoNotOptimize(realize(s.figure, s.angles));
}
BENCHMARK(BM_RealizeHexagon);

}  // namespace
