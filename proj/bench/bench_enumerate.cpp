#include <benchmark/benchmark.h>

#include "psl2ogs/enumerate.hpp"

using namespace psl2ogs;

namespace {

void BM_CountSerial(benchmark::State& state) {
  const auto f = Field::of_order(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumeration::serial::count_psl2(*f));
}

void BM_CountParallel(benchmark::State& state) {
  const auto f = Field::of_order(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumeration::parallel::count_psl2(*f));
}

void BM_ComposeSerial(benchmark::State& state) {
  const SeqTables tables = SeqTables::build(Field::of_order(static_cast<std::uint64_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(enumeration::serial::compose_all(tables));
}

void BM_ComposeParallel(benchmark::State& state) {
  const SeqTables tables = SeqTables::build(Field::of_order(static_cast<std::uint64_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(enumeration::parallel::compose_all(tables));
}

}  // namespace

BENCHMARK(BM_CountSerial)->Arg(13)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountParallel)->Arg(13)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ComposeSerial)->Arg(13)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ComposeParallel)->Arg(13)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
