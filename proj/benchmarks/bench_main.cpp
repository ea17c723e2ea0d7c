#include <benchmark/benchmark.h>

#include "catalan/logic.hpp"
#include "catalan/parity.hpp"
#include "catalan/seq.hpp"
#include "catalan/series.hpp"

namespace {

// Fresh engine per iteration so the memo is cold and the recurrence cost is
// what gets measured.
void BM_FalseRowRecurrence(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    catalan::SeqEngine engine;
    benchmark::DoNotOptimize(engine.f_false(n));
  }
}
BENCHMARK(BM_FalseRowRecurrence)->Arg(128)->Arg(256)->Arg(512);

void BM_CatalanRecurrence(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    catalan::SeqEngine engine;
    benchmark::DoNotOptimize(engine.catalan(n));
  }
}
BENCHMARK(BM_CatalanRecurrence)->Arg(256)->Arg(1024);

void BM_Mod2Engine(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(catalan::mod2_engine(n));
}
BENCHMARK(BM_Mod2Engine)->Arg(1024)->Arg(4096);

void BM_CensusProduct(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(catalan::census(n, catalan::CountMode::Product));
}
BENCHMARK(BM_CensusProduct)->Arg(10)->Arg(12);

void BM_CensusTruthTable(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(catalan::census(n, catalan::CountMode::TruthTable));
}
BENCHMARK(BM_CensusTruthTable)->Arg(8)->Arg(10);

void BM_ClosedFormSeries(benchmark::State& state) {
  const unsigned order = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(catalan::expand_A_closed_form(order));
}
BENCHMARK(BM_ClosedFormSeries)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
