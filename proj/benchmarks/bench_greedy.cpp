#include <benchmark/benchmark.h>

#include "proglab/greedy.hpp"

using namespace proglab;

static void GreedyTranslation(benchmark::State& state) {
    const auto limit = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(greedy_set(Progression::Translation, limit));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(GreedyTranslation)->Range(1 << 10, 1 << 15)->Complexity();

static void GreedyDilation(benchmark::State& state) {
    const auto limit = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(greedy_set(Progression::Dilation, limit));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(GreedyDilation)->Range(1 << 10, 1 << 17)->Complexity();

static void GreedyExponentiation(benchmark::State& state) {
    const auto limit = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            greedy_set(Progression::Exponentiation, limit));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(GreedyExponentiation)->Range(1 << 10, 1 << 17)->Complexity();

static void VerifyFreeDilation(benchmark::State& state) {
    const auto limit = static_cast<std::uint64_t>(state.range(0));
    auto set = greedy_set(Progression::Dilation, limit);
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_free(set.members, set.family));
    }
}
BENCHMARK(VerifyFreeDilation)->Range(1 << 10, 1 << 16);

BENCHMARK_MAIN();
