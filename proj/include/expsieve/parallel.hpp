#pragma once

// Minimal worker pool over an index range. Tasks are independent; task i
// writes only slot i of its output, so results never depend on the worker
// count or on scheduling. Dynamic (atomic-counter) dispatch balances uneven
// per-task cost.

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace expsieve::parallel {

inline unsigned default_workers() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

template <class Fn>
void parallel_for_index(std::size_t n, unsigned workers, Fn&& fn) {
    if (workers == 0) workers = default_workers();
    if (workers <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    if (workers > n) workers = static_cast<unsigned>(n);

    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto body = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= n || failed.load(std::memory_order_relaxed)) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                failed.store(true, std::memory_order_relaxed);
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(body);
    body();
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace expsieve::parallel
