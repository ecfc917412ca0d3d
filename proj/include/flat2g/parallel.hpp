#pragma once

// Deterministic chunked parallelism: the index range is split into contiguous
// chunks, workers fill per-chunk results, and results merge in chunk order,
// so output does not depend on the worker count.

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace flat2g {

inline unsigned default_workers() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

template <class R, class ChunkFn, class MergeFn>
R parallel_chunks(size_t total, unsigned workers, R init, ChunkFn chunk, MergeFn merge) {
    if (workers == 0) workers = default_workers();
    size_t nchunks = std::min<size_t>(workers, total);
    if (nchunks <= 1) {
        R r = chunk(size_t{0}, total);
        return merge(std::move(init), std::move(r));
    }
    std::vector<R> results(nchunks);
    std::vector<std::thread> threads;
    threads.reserve(nchunks);
    size_t per = total / nchunks, extra = total % nchunks, begin = 0;
    for (size_t i = 0; i < nchunks; ++i) {
        size_t len = per + (i < extra ? 1 : 0);
        size_t end = begin + len;
        threads.emplace_back([&results, i, begin, end, &chunk]() { results[i] = chunk(begin, end); });
        begin = end;
    }
    for (auto& t : threads) t.join();
    R acc = std::move(init);
    for (auto& r : results) acc = merge(std::move(acc), std::move(r));
    return acc;
}

}  // namespace flat2g
