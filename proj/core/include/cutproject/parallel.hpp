#ifndef CUTPROJECT_PARALLEL_HPP
#define CUTPROJECT_PARALLEL_HPP

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace cutproject {

/// Runs fn(chunk_index, begin, end) over [0, total) split into `jobs`
/// contiguous chunks.  The static partition depends only on (total, jobs), so
/// per-chunk results merged in chunk order are reproducible.
inline void parallel_chunks(std::size_t total, int jobs,
                            const std::function<void(int, std::size_t, std::size_t)>& fn) {
    if (jobs <= 1 || total <= 1) {
        fn(0, 0, total);
        return;
    }
    const std::size_t n = std::min<std::size_t>(static_cast<std::size_t>(jobs), total);
    std::vector<std::thread> pool;
    pool.reserve(n);
    for (std::size_t c = 0; c < n; ++c) {
        const std::size_t begin = total * c / n;
        const std::size_t end = total * (c + 1) / n;
        pool.emplace_back([&fn, c, begin, end] { fn(static_cast<int>(c), begin, end); });
    }
    for (auto& t : pool)
        t.join();
}

} // namespace cutproject

#endif
