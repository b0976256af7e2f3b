#pragma once

// Small shared utilities: bounded parallel for-loop honoring GELMOD_THREADS.

#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace gelmod {

inline int thread_budget() {
    if (const char* env = std::getenv("GELMOD_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// Runs fn(i) for i in [0, count). Falls back to serial execution when the
// budget is 1 or the range is small. fn must be safe to run concurrently for
// distinct i; exceptions propagate (first one wins).
inline void parallel_for(int count, const std::function<void(int)>& fn) {
    const int threads = std::min(thread_budget(), count);
    if (threads <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t]() {
            try {
                for (int i = t; i < count; i += threads) fn(i);
            } catch (...) {
                errors[static_cast<size_t>(t)] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace gelmod
