#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace cechcube::detail {

// Static block partition of [0, n); fn must be safe to call concurrently on
// distinct indices. jobs <= 1 runs inline.
inline void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn) {
    if (jobs <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), n);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) {
        pool.emplace_back([&, t] {
            std::size_t lo = n * t / workers;
            std::size_t hi = n * (t + 1) / workers;
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace cechcube::detail
