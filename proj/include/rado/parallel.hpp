#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace rado {

inline int default_threads() {
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

/// Runs fn(chunk_index, begin, end) over [0, count) split into contiguous
/// chunks, one thread per chunk. The chunking is a function of (count,
/// threads) only, so deterministic reductions can merge by chunk index.
template <typename Fn>
void parallel_chunks(std::int64_t count, int threads, Fn&& fn) {
    if (threads < 1) threads = 1;
    if (count <= 0) return;
    int chunks = static_cast<int>(std::min<std::int64_t>(threads, count));
    if (chunks == 1) {
        fn(0, std::int64_t{0}, count);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(chunks));
    std::int64_t per = count / chunks, extra = count % chunks, begin = 0;
    for (int i = 0; i < chunks; ++i) {
        std::int64_t len = per + (i < extra ? 1 : 0);
        pool.emplace_back([&fn, i, begin, len] { fn(i, begin, begin + len); });
        begin += len;
    }
    for (auto& t : pool) t.join();
}

}  // namespace rado
