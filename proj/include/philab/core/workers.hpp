#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace philab {

/// Worker count: PHILAB_WORKERS if set to a positive integer, else the
/// hardware concurrency (at least 1).
inline unsigned default_workers() {
    if (const char* env = std::getenv("PHILAB_WORKERS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return static_cast<unsigned>(std::min<long>(v, 256));
        } catch (const std::exception&) {
        }
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

/// Runs body(w, begin, end) over `workers` contiguous slices of [0, n).
/// The first exception thrown by any slice is rethrown after the join.
template <class Body>
void parallel_slices(std::size_t n, unsigned workers, Body&& body) {
    workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    if (workers == 1) {
        body(0U, std::size_t{0}, n);
        return;
    }
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex mu;
    const std::size_t step = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t lo = std::min(n, w * step), hi = std::min(n, lo + step);
        pool.emplace_back([&, w, lo, hi] {
            try {
                body(w, lo, hi);
            } catch (...) {
                std::lock_guard lock(mu);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

/// Runs body(i) for every i in [0, n), handing out indices dynamically.
template <class Body>
void parallel_for(std::size_t n, unsigned workers, Body&& body) {
    std::atomic<std::size_t> next{0};
    parallel_slices(std::min<std::size_t>(n, std::max(1U, workers)), workers, [&](unsigned, std::size_t, std::size_t) {
        for (std::size_t i = next++; i < n; i = next++) body(i);
    });
}

}  // namespace philab
