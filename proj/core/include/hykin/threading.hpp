#pragma once

#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace hykin {

/// Runs fn(begin, end) over a contiguous partition of [0, count) on
/// `workers` threads and blocks until every chunk finished. With one worker
/// the call runs inline. The first exception thrown by any chunk is
/// rethrown to the caller. All cross-chunk reads must come from immutable
/// snapshots; chunks write disjoint cells.
class WorkerPool {
public:
    explicit WorkerPool(int workers)
        : workers_(workers > 0 ? workers : int(std::thread::hardware_concurrency())) {
        if (workers_ < 1)
            workers_ = 1;
    }

    int size() const { return workers_; }

    void parallel_for(int count, const std::function<void(int, int)>& fn) const {
        if (count <= 0)
            return;
        const int n = std::min(workers_, count);
        if (n == 1) {
            fn(0, count);
            return;
        }
        std::vector<std::thread> threads;
        threads.reserve(n - 1);
        std::vector<std::exception_ptr> errors(n);
        const int chunk = (count + n - 1) / n;
        auto run = [&](int w) {
            const int b = w * chunk;
            const int e = std::min(count, b + chunk);
            if (b >= e)
                return;
            try {
                fn(b, e);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        };
        for (int w = 1; w < n; ++w)
            threads.emplace_back(run, w);
        run(0);
        for (auto& t : threads)
            t.join();
        for (auto& e : errors)
            if (e)
                std::rethrow_exception(e);
    }

private:
    int workers_ = 1;
};

} // namespace hykin
