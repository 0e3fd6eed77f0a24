#pragma once

#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace qcores {

inline int default_workers() {
    if (const char* env = std::getenv("QCORES_WORKERS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

// Deterministic fold over an index range: item i goes to worker i mod W,
// locals merge in worker order. Work functions must be pure; with exact
// arithmetic and commutative merges the result is schedule-independent.
// An exception thrown by any worker is rethrown on the calling thread.
template <class Acc, class Fn, class Merge>
Acc parallel_fold(std::size_t n, int workers, Acc init, Fn&& fn, Merge&& merge) {
    const int w = std::max(1, std::min<int>(workers, static_cast<int>(n ? n : 1)));
    if (w == 1) {
        Acc acc = std::move(init);
        for (std::size_t i = 0; i < n; ++i) fn(acc, i);
        return acc;
    }
    std::vector<Acc> locals(static_cast<std::size_t>(w), init);
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(w));
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(w));
    for (int k = 0; k < w; ++k) {
        threads.emplace_back([&, k] {
            try {
                for (std::size_t i = static_cast<std::size_t>(k); i < n;
                     i += static_cast<std::size_t>(w))
                    fn(locals[static_cast<std::size_t>(k)], i);
            } catch (...) {
                errors[static_cast<std::size_t>(k)] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (const auto& err : errors)
        if (err) std::rethrow_exception(err);
    Acc acc = std::move(init);
    for (auto& local : locals) merge(acc, std::move(local));
    return acc;
}

}  // namespace qcores
