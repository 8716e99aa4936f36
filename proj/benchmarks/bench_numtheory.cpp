#include <benchmark/benchmark.h>

#include "proglab/numtheory.hpp"

using namespace proglab;

static void FactorizeRange(benchmark::State& state) {
    const auto n_max = static_cast<std::uint64_t>(state.range(0));
    factorize(2);  // force the sieve build outside the timed loop
    for (auto _ : state) {
        std::uint64_t exponents = 0;
        for (std::uint64_t n = 1; n <= n_max; ++n)
            for (const auto& pp : factorize(n)) exponents += pp.exponent;
        benchmark::DoNotOptimize(exponents);
    }
    state.SetItemsProcessed(state.iterations() * n_max);
}
BENCHMARK(FactorizeRange)->Range(1 << 12, 1 << 20);

static void FactorizeRoughU64(benchmark::State& state) {
    // worst case for the post-sieve path: a product of two large primes
    const std::uint64_t semiprime = 1000003ull * 999983ull;
    for (auto _ : state) {
        benchmark::DoNotOptimize(factorize(semiprime));
    }
}
BENCHMARK(FactorizeRoughU64);

static void PowerRootsScan(benchmark::State& state) {
    const auto n_max = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        std::size_t total = 0;
        for (std::uint64_t n = 2; n <= n_max; ++n)
            total += power_roots(n).size();
        benchmark::DoNotOptimize(total);
    }
    state.SetItemsProcessed(state.iterations() * n_max);
}
BENCHMARK(PowerRootsScan)->Range(1 << 12, 1 << 18);

static void ZetaCertified(benchmark::State& state) {
    const double eps = 1.0 / static_cast<double>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(zeta(2, eps));
    }
}
BENCHMARK(ZetaCertified)->RangeMultiplier(100)->Range(1000, 1'000'000'000);

BENCHMARK_MAIN();
