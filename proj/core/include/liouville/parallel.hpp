#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace liouville {

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Static block partition of [0, count); fn(thread_id, begin, end).
// Results that depend on ordering must be merged by the caller in block order.
// The first worker exception is rethrown on the calling thread.
template <typename Fn>
void parallel_blocks(std::size_t count, int threads, Fn&& fn) {
    int t = resolve_threads(threads);
    if (count == 0) return;
    t = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(t), count));
    if (t <= 1) {
        fn(0, std::size_t{0}, count);
        return;
    }
    std::size_t chunk = (count + t - 1) / t;
    std::vector<std::thread> pool;
    pool.reserve(t);
    std::exception_ptr error;
    std::mutex error_mutex;
    for (int i = 0; i < t; ++i) {
        std::size_t begin = static_cast<std::size_t>(i) * chunk;
        std::size_t end = std::min(count, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&fn, &error, &error_mutex, i, begin, end] {
            try {
                fn(i, begin, end);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        double y = x - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    double value() const { return sum; }
};

}  // namespace liouville
