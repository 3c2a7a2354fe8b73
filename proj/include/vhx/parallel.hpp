#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace vhx {

/// Worker count: VHX_THREADS wins, then the requested value, then hardware.
inline int thread_count(int requested = 0) {
    if (const char* env = std::getenv("VHX_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

/// Splits [0, count) into contiguous chunks, folds each chunk into its own
/// accumulator, then merges accumulators in ascending chunk order.
template <class Acc, class Body, class Merge>
Acc parallel_fold(std::uint64_t count, int threads, Acc init, Body body, Merge merge) {
    threads = std::max(1, threads);
    std::uint64_t chunks = std::min<std::uint64_t>(count ? count : 1, static_cast<std::uint64_t>(threads));
    if (chunks <= 1) {
        for (std::uint64_t i = 0; i < count; ++i) body(init, i);
        return init;
    }
    std::vector<Acc> parts(chunks, init);
    std::vector<std::thread> pool;
    for (std::uint64_t c = 0; c < chunks; ++c) {
        pool.emplace_back([&, c] {
            std::uint64_t lo = count * c / chunks, hi = count * (c + 1) / chunks;
            for (std::uint64_t i = lo; i < hi; ++i) body(parts[c], i);
        });
    }
    for (auto& t : pool) t.join();
    Acc out = init;
    for (auto& p : parts) merge(out, p);
    return out;
}

}  // namespace vhx
