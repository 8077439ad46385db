#include <benchmark/benchmark.h>

#include "trirealize/theorems.hpp"

using namespace trirealize;

namespace {

void BM_Campaign(benchmark::State& state) {
  const auto kind = static_cast<ScenarioKind>(state.range(0));
  const auto threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(run_verification(kind, {100, 42, std::nullopt, false, threads}));
  state.SetLabel(std::string(to_string(kind)));
}
BENCHMARK(BM_Campaign)
    ->ArgsProduct({benchmark::CreateDenseRange(0, 7, 1), {1, 4}})
    ->Unit(benchmark::kMillisecond);

}  // namespace
