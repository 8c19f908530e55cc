#pragma once

#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace apskit {

/// Worker count for a request of `requested` threads: positive values pass
/// through, 0 defers to APSKIT_THREADS, then to the hardware concurrency.
inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("APSKIT_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

/// Runs fn(i) for every i in [0, n) on up to n_threads workers; n_threads <= 1
/// runs inline. Indices are claimed through an atomic counter, so fn must be
/// safe to call concurrently for distinct i and must not throw.
inline void parallel_for_index(std::size_t n, int n_threads,
                               const std::function<void(std::size_t)>& fn) {
    if (n == 0) return;
    if (n_threads <= 0) n_threads = resolve_threads(0);
    if (static_cast<std::size_t>(n_threads) > n) n_threads = static_cast<int>(n);
    if (n_threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(n_threads));
    for (int w = 0; w < n_threads; ++w)
        workers.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
        });
    for (std::thread& t : workers) t.join();
}

}  // namespace apskit
