#pragma once

// Minimal fork-join helper: split [0, total) into contiguous chunks, one
// worker thread per chunk. Callers merge per-chunk results in chunk order,
// so output never depends on the worker count.

#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace genergy {

// GENERGY_WORKERS overrides hardware concurrency; always at least 1.
inline int default_worker_count() {
    if (const char* env = std::getenv("GENERGY_WORKERS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

// fn(chunk_index, lo, hi) runs on its own thread per chunk.
template <class Fn>
inline int parallel_ranges(std::uint64_t total, int workers, Fn&& fn) {
    if (workers <= 0) workers = default_worker_count();
    if (total == 0) return workers;
    const std::uint64_t max_chunks = total < static_cast<std::uint64_t>(workers)
                                         ? total
                                         : static_cast<std::uint64_t>(workers);
    const int chunks = static_cast<int>(max_chunks);
    if (chunks == 1) {
        fn(0, std::uint64_t{0}, total);
        return 1;
    }
    std::vector<std::thread> threads;
    threads.reserve(static_cast<size_t>(chunks));
    for (int c = 0; c < chunks; ++c) {
        const std::uint64_t lo = total / chunks * c + std::min<std::uint64_t>(c, total % chunks);
        const std::uint64_t hi =
            total / chunks * (c + 1) + std::min<std::uint64_t>(c + 1, total % chunks);
        threads.emplace_back([&fn, c, lo, hi] { fn(c, lo, hi); });
    }
    for (auto& t : threads) t.join();
    return chunks;
}

}  // namespace genergy
