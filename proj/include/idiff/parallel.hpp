#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace idiff {

/// Runs fn(k) for k in [0, n) on up to `jobs` threads. Work is handed out by
/// index, so callers writing into slot k get order-independent output.
template <typename Fn>
void parallel_for(std::size_t n, unsigned jobs, Fn&& fn) {
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    if (jobs == 1) {
        for (std::size_t k = 0; k < n; ++k) fn(k);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (unsigned w = 0; w < jobs; ++w) {
        workers.emplace_back([&] {
            for (std::size_t k = next++; k < n; k = next++) {
                try {
                    fn(k);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    }
    for (auto& t : workers) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace idiff
