/* Matrix assembly benchmarks across the four families. */

#include <benchmark/benchmark.h>

#include "branchq/branching.hpp"

using namespace branchq;

static void bm_type1(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(type1(2, d));
}
BENCHMARK(bm_type1)->Arg(3)->Arg(4)->Arg(5);

static void bm_type2(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(type2(2, 2, 2));
}
BENCHMARK(bm_type2);

static void bm_sp(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(sp_matrix(2, p));
}
BENCHMARK(bm_sp)->Arg(3)->Arg(4);

static void bm_so(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(so_matrix(2, p));
}
BENCHMARK(bm_so)->Arg(3)->Arg(4);
