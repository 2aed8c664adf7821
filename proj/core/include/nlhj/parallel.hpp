// parallel.hpp
// ------------
// Minimal chunked parallel-for. Chunk boundaries depend only on (size,
// nthreads), so results of pure per-index maps are identical for any thread
// count; reductions below combine chunks in index order for the same reason.

#pragma once

#include <algorithm>
#include <functional>
#include <thread>
#include <vector>

namespace nlhj {

template <typename F>
void parallel_for(int begin, int end, int nthreads, F&& body) {
    int count = end - begin;
    if (count <= 0) return;
    if (nthreads <= 1 || count < 2 * nthreads) {
        for (int i = begin; i < end; ++i) body(i);
        return;
    }
    int chunk = (count + nthreads - 1) / nthreads;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(nthreads));
    for (int t = 0; t < nthreads; ++t) {
        int lo = begin + t * chunk;
        int hi = std::min(end, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &body]() {
            for (int i = lo; i < hi; ++i) body(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace nlhj
