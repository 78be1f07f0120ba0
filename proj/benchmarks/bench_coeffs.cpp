/* Coefficient evaluation benchmarks; memoization makes repeated queries
   cheap, so each iteration hits fresh and cached paths together. */

#include <benchmark/benchmark.h>

#include "branchq/coeffs.hpp"

using namespace branchq;

static void bm_lr_medium(benchmark::State& state) {
    const Partition lam{4, 3, 2, 1};
    const Partition mu{3, 2};
    const Partition nu{2, 2, 1};
    for (auto _ : state) benchmark::DoNotOptimize(lr(lam, mu, nu));
}
BENCHMARK(bm_lr_medium);

static void bm_lr_multi(benchmark::State& state) {
    const Partition lam{3, 2, 1};
    const std::vector<Partition> betas{Partition{2}, Partition{2, 1}, Partition{1}};
    for (auto _ : state) benchmark::DoNotOptimize(lr_multi(lam, betas));
}
BENCHMARK(bm_lr_multi);

static void bm_cap_c(benchmark::State& state) {
    const PartitionPair target{Partition{2, 1}, Partition{1, 1}};
    const std::vector<PartitionPair> betas{
        {Partition{1}, Partition{1}}, {Partition{1}, Partition{}}, {Partition{1}, Partition{1}}};
    for (auto _ : state) benchmark::DoNotOptimize(cap_C(target, betas));
}
BENCHMARK(bm_cap_c);

static void bm_cap_f(benchmark::State& state) {
    const Partition lam{2, 1};
    const std::vector<Partition> betas{Partition{2}, Partition{1, 1}, Partition{1}};
    for (auto _ : state) benchmark::DoNotOptimize(cap_F(lam, betas));
}
BENCHMARK(bm_cap_f);
