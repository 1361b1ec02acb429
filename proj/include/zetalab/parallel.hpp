#pragma once

// Minimal fork-join helper.  Modules parallelise over independent work items
// (samples, grid chunks); the CLI caps the worker count globally.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace zetalab {

inline int& max_workers() {
    static int n = int(std::thread::hardware_concurrency());
    return n;
}

// f(i) is called once for every i in [0, n); items are claimed atomically so
// uneven work balances itself.
template <class F>
void parallel_for(std::size_t n, const F& f, int workers = 0) {
    if (workers <= 0) workers = std::max(1, max_workers());
    workers = int(std::min<std::size_t>(workers, n));
    if (workers <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) f(i);
        });
    for (auto& th : pool) th.join();
}

} // namespace zetalab
