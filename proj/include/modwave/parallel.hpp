#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace modwave {

/// Runs fn(i) for i = 0..n-1 on a small thread pool; results land at index i,
/// so output order never depends on scheduling.
template <typename R>
std::vector<R> parallel_map(int n, const std::function<R(int)>& fn) {
    std::vector<R> out(n);
    if (n == 0) return out;
    const unsigned workers =
        std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()), n);
    if (workers == 1) {
        for (int i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            const int i = next.fetch_add(1);
            if (i >= n) return;
            try {
                out[i] = fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    if (error) std::rethrow_exception(error);
    return out;
}

}  // namespace modwave
