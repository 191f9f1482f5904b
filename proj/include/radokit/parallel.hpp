#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <limits>
#include <thread>
#include <vector>

namespace radokit {

/// Runs task(0..n-1) on up to `workers` threads. A task returning true marks a
/// hit; tasks with an index above the least hit seen so far are skipped. Every
/// task below the least hit is guaranteed to have run, so callers that reduce
/// by "least index wins" get the same answer as a sequential loop.
/// Returns the least hit index, or n when no task hit.
template <class Task>
std::size_t ordered_first_hit(std::size_t n, unsigned workers, Task&& task)
{
    if (workers <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            if (task(i))
                return i;
        return n;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{n};
    auto run = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= n || i > best.load())
                return;
            if (task(i)) {
                std::size_t cur = best.load();
                while (i < cur && !best.compare_exchange_weak(cur, i)) {
                }
            }
        }
    };
    std::vector<std::thread> pool;
    unsigned count = std::min<unsigned>(workers, static_cast<unsigned>(n));
    pool.reserve(count);
    for (unsigned t = 0; t < count; ++t)
        pool.emplace_back(run);
    for (auto& th : pool)
        th.join();
    return best.load();
}

}  // namespace radokit
