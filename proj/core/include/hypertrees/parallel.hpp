#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace hypertrees {

/// Thread count: explicit argument, else HYPERTREES_THREADS, else hardware.
inline int thread_count(int requested = 0) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("HYPERTREES_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs fn(i) for i in [0, count) over a pool. Tasks must be independent and
/// write only to their own slot, so results are deterministic regardless of
/// schedule. The first thrown exception is rethrown.
inline void parallel_for(int count, const std::function<void(int)>& fn, int threads = 0) {
    int nt = std::min(thread_count(threads), count);
    if (nt <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    std::vector<std::thread> pool;
    pool.reserve(nt);
    for (int t = 0; t < nt; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                int i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mu);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace hypertrees
