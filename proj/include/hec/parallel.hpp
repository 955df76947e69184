// Tiny deterministic parallel-for over index chunks.

#pragma once

#include <functional>
#include <thread>
#include <vector>

namespace hec {

inline int default_threads() {
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? int(hc) : 1;
}

// Runs fn(begin, end, chunk_id) over a fixed chunking of [0, n).  Chunk
// boundaries depend only on (n, threads), so per-chunk outputs can be merged
// in chunk order for results independent of scheduling.
inline void parallel_chunks(size_t n, int threads,
                            const std::function<void(size_t, size_t, int)>& fn) {
    if (n == 0) return;
    if (threads < 1) threads = 1;
    size_t nchunks = std::min<size_t>(threads, n);
    size_t per = (n + nchunks - 1) / nchunks;
    if (nchunks == 1) {
        fn(0, n, 0);
        return;
    }
    std::vector<std::thread> pool;
    for (size_t c = 0; c < nchunks; ++c) {
        size_t b = c * per, e = std::min(n, b + per);
        if (b >= e) break;
        pool.emplace_back(fn, b, e, int(c));
    }
    for (auto& t : pool) t.join();
}

}  // namespace hec
