#pragma once

#include <atomic>
#include <optional>
#include <thread>
#include <vector>

namespace cpk {

// Runs f(0..jobs-1) on up to `threads` workers. Results land at their job
// index, so output order never depends on scheduling.
template <typename R, typename F>
std::vector<R> parallel_map(int threads, int jobs, F&& f) {
    std::vector<std::optional<R>> slots(static_cast<size_t>(jobs));
    if (threads <= 1 || jobs <= 1) {
        for (int i = 0; i < jobs; ++i) slots[static_cast<size_t>(i)] = f(i);
    } else {
        std::atomic<int> next{0};
        auto worker = [&] {
            for (int i = next.fetch_add(1); i < jobs; i = next.fetch_add(1))
                slots[static_cast<size_t>(i)] = f(i);
        };
        const int nw = std::min(threads, jobs);
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(nw));
        for (int t = 0; t < nw; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    std::vector<R> out;
    out.reserve(static_cast<size_t>(jobs));
    for (auto& slot : slots) out.push_back(std::move(*slot));
    return out;
}

}  // namespace cpk
