#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace bsl {

// Worker threads to use: BSL_THREADS if set to a positive integer, else the
// hardware concurrency.
inline std::size_t worker_count() {
    std::size_t hw = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("BSL_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return std::min<std::size_t>(static_cast<std::size_t>(v), 256);
        } catch (...) {
        }
    }
    return hw;
}

// Calls body(worker, index) for every index in [0, count). Indices are dealt
// round-robin, so each body call must write only to its own output slot (or
// to per-worker scratch) for results to stay deterministic.
template <class Body>
void parallel_for(std::size_t count, Body&& body) {
    const std::size_t workers = std::min(worker_count(), std::max<std::size_t>(count, 1));
    if (workers <= 1) {
        for (std::size_t idx = 0; idx < count; ++idx) body(std::size_t{0}, idx);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t idx = w; idx < count; idx += workers) body(w, idx);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace bsl
