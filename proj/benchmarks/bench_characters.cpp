/* Character table and spectral verification benchmarks. */

#include <benchmark/benchmark.h>

#include "branchq/characters.hpp"

using namespace branchq;

static void bm_character_table(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(character_table(d));
}
BENCHMARK(bm_character_table)->Arg(5)->Arg(7);

static void bm_spectral_verify(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(spectral_verify(2, d));
}
BENCHMARK(bm_spectral_verify)->Arg(4)->Arg(5);
