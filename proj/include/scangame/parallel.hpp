#pragma once
// Minimal deterministic work partitioning: split [0, n) into contiguous
// chunks, one per worker thread.  Callers write results into preallocated
// slots indexed by position, so the output is identical for any thread count
// (including the single-threaded fallback).

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace scangame {

// Runs fn(begin, end) over a partition of [0, n).  fn must only write to
// locations derived from its own index range.
template <typename Fn>
void parallel_for_chunks(std::size_t n, Fn&& fn) {
    if (n == 0) return;
    std::size_t hw = std::thread::hardware_concurrency();
    std::size_t workers = std::clamp<std::size_t>(hw, 1, 16);
    workers = std::min(workers, n);
    if (workers <= 1) {
        fn(std::size_t{0}, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        std::size_t lo = w * chunk;
        std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&fn, lo, hi] { fn(lo, hi); });
    }
    for (auto& t : pool) t.join();
}

} // namespace scangame
