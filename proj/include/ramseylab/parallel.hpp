#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace ramseylab {

/// Runs fn(0..n-1) across `workers` threads pulling from a shared counter.
/// Callers collect results into index-addressed slots, so the merged output
/// is identical for any worker count.
inline void parallel_for(int n, int workers, const std::function<void(int)>& fn) {
    if (workers <= 1 || n <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    auto pull = [&] {
        for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
    };
    std::vector<std::thread> threads;
    int spawn = std::min(workers, n);
    threads.reserve(spawn);
    for (int w = 0; w < spawn; ++w) threads.emplace_back(pull);
    for (auto& t : threads) t.join();
}

}  // namespace ramseylab
