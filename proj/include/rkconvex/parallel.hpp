#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace rkconvex {

/// Runs fn(i) for i in [0, n) on up to `jobs` threads. Work items must be
/// independent; callers that aggregate do so afterwards in index order, so
/// results never depend on the thread count.
template <typename Fn>
void parallel_for(std::size_t n, unsigned jobs, Fn&& fn) {
    if (jobs == 0) jobs = std::thread::hardware_concurrency();
    if (jobs <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(jobs, n));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t)
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < n; i += workers) fn(i);
        });
    for (auto& th : pool) th.join();
}

inline unsigned default_jobs() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

}  // namespace rkconvex
