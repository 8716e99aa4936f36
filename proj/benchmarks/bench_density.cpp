#include <benchmark/benchmark.h>

#include "proglab/density.hpp"
#include "proglab/families.hpp"

using namespace proglab;

static void CountG3(benchmark::State& state) {
    const auto n_max = static_cast<std::uint64_t>(state.range(0));
    auto pred = family_predicate(SetFamily::g3());
    count_members(pred, 2);  // sieve warm-up
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_members(pred, n_max));
    }
    state.SetItemsProcessed(state.iterations() * n_max);
}
BENCHMARK(CountG3)->Range(1 << 14, 1 << 20);

static void UniformScanG3(benchmark::State& state) {
    const auto n_max = static_cast<std::uint64_t>(state.range(0));
    auto pred = family_predicate(SetFamily::g3());
    for (auto _ : state) {
        benchmark::DoNotOptimize(uniform_scan(pred, 1000, n_max));
    }
    state.SetItemsProcessed(state.iterations() * n_max);
}
BENCHMARK(UniformScanG3)->Range(1 << 14, 1 << 20);

static void EulerProductLevel2(benchmark::State& state) {
    const double eps = 1.0 / static_cast<double>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(analytic_density_s(2, eps));
    }
}
BENCHMARK(EulerProductLevel2)->RangeMultiplier(10)->Range(1000, 1'000'000);

static void ExcludedE3Count(benchmark::State& state) {
    const auto n_max = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(excluded_e3_count(n_max));
    }
}
BENCHMARK(ExcludedE3Count)->RangeMultiplier(100)->Range(10'000, 100'000'000);

BENCHMARK_MAIN();
