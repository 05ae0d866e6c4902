#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace weilrep {

/// Worker count: WEILREP_THREADS if set, else hardware concurrency.  Thread
/// count only affects wall time; all results are exact and order-independent.
inline unsigned thread_count() {
    if (const char* env = std::getenv("WEILREP_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return (unsigned)v;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc ? hc : 1;
}

/// Apply fn(i) for i in [0, n) across threads in contiguous chunks.
inline void parallel_for(long long n, const std::function<void(long long)>& fn) {
    const unsigned workers = thread_count();
    if (workers <= 1 || n < 256) {
        for (long long i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    const long long chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const long long lo = w * chunk, hi = std::min<long long>(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (long long i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace weilrep
