#pragma once

#include <cstdint>
#include <cstdlib>
#include <thread>
#include <vector>

namespace proglab {

// Worker cap: hardware concurrency, clamped by the PROGLAB_THREADS
// environment variable when it parses as a positive integer.
inline unsigned thread_budget() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("PROGLAB_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1 && v < 1024)
            hw = std::min<unsigned>(hw, static_cast<unsigned>(v));
    }
    return hw;
}

// Runs fn(chunk_index, lo, hi) over a contiguous split of [first, last].
// Results must be merged by chunk index; the split itself depends only on
// the range and the chunk count, so output is reproducible.
template <typename Fn>
void for_each_chunk(std::uint64_t first, std::uint64_t last, Fn&& fn) {
    const std::uint64_t total = last - first + 1;
    unsigned workers = thread_budget();
    if (workers > total) workers = static_cast<unsigned>(total);
    if (workers <= 1 || total < 4096) {
        fn(0, first, last);
        return;
    }
    const std::uint64_t step = total / workers;
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
        std::uint64_t lo = first + step * t;
        std::uint64_t hi = (t + 1 == workers) ? last : lo + step - 1;
        threads.emplace_back([&fn, t, lo, hi] { fn(t, lo, hi); });
    }
    for (auto& th : threads) th.join();
}

}  // namespace proglab
