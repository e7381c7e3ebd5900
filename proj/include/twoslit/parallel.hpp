#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace twoslit {

/// Process-wide worker count for data-parallel loops. Defaults to 1;
/// the CLI raises it via --threads. Results never depend on it: workers
/// write disjoint slots and all reductions run in fixed order afterwards.
inline std::atomic<unsigned>& thread_count_ref() {
    static std::atomic<unsigned> n{1};
    return n;
}

inline void set_thread_count(unsigned n) { thread_count_ref().store(n == 0 ? 1 : n); }
inline unsigned thread_count() { return thread_count_ref().load(); }

/// Runs fn(i) for i in [0, n) over thread_count() workers, contiguous
/// chunks per worker.
template <class Fn>
void parallel_for(std::size_t n, Fn&& fn) {
    const unsigned workers = std::min<std::size_t>(thread_count(), n == 0 ? 1 : n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace twoslit
