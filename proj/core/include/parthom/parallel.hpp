#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace parthom {

// Worker count: PARTHOM_THREADS when set (clamped to >= 1), otherwise the
// hardware concurrency.
unsigned thread_budget();

// Runs f(i) for i in [0, count) across the thread budget.  Work items must
// not share mutable state; exceptions are rethrown on the caller thread.
template <typename F>
void parallel_for(std::size_t count, F&& f) {
    const unsigned budget = thread_budget();
    if (budget <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    auto worker = [&]() {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count || failed.load()) return;
            try {
                f(i);
            } catch (...) {
                if (!failed.exchange(true)) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> threads;
    const unsigned workers = static_cast<unsigned>(
        std::min<std::size_t>(budget, count));
    threads.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    if (failed.load() && error) std::rethrow_exception(error);
}

}  // namespace parthom
