#include <benchmark/benchmark.h>

#include "qcyc/paper_tables.hpp"

using namespace qcyc;

namespace {

const char* const kTypes[] = {"E6", "E7", "E8", "F4", "D6"};

void BM_TableSerial(benchmark::State& state) {
  const LieType t = LieType::parse(kTypes[state.range(0)]);
  state.SetLabel(t.name());
  for (auto _ : state) benchmark::DoNotOptimize(compute_table_serial(t));
}

void BM_TableParallel(benchmark::State& state) {
  const LieType t = LieType::parse(kTypes[state.range(0)]);
  state.SetLabel(t.name());
  for (auto _ : state) benchmark::DoNotOptimize(compute_table_parallel(t));
}

void BM_OracleSerial(benchmark::State& state) {
  const LieType t = LieType::parse(state.range(0) == 0 ? "B4" : "F4");
  state.SetLabel(t.name());
  for (auto _ : state) benchmark::DoNotOptimize(oracle_sweep_serial(t, 2));
}

void BM_OracleParallel(benchmark::State& state) {
  const LieType t = LieType::parse(state.range(0) == 0 ? "B4" : "F4");
  state.SetLabel(t.name());
  for (auto _ : state) benchmark::DoNotOptimize(oracle_sweep_parallel(t, 2));
}

}  // namespace

BENCHMARK(BM_TableSerial)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TableParallel)->DenseRange(0, 4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_OracleSerial)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleParallel)->DenseRange(0, 1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
