#ifndef GS_PARALLEL_HPP
#define GS_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace gs {

inline int default_workers() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// Runs fn(block_index, begin, end) over fixed-size blocks of [0, count).
// The block layout depends only on count and block_size, never on the worker
// count, so callers that fold per-block partial results in block order get
// the same answer at any parallelism level.
inline void parallel_blocks(std::size_t count, std::size_t block_size, int workers,
                            const std::function<void(std::size_t, std::size_t, std::size_t)>& fn) {
    if (count == 0) return;
    if (block_size == 0) block_size = 1;
    const std::size_t n_blocks = (count + block_size - 1) / block_size;

    if (workers <= 1 || n_blocks == 1) {
        for (std::size_t b = 0; b < n_blocks; ++b)
            fn(b, b * block_size, std::min(count, (b + 1) * block_size));
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t b = next.fetch_add(1);
            if (b >= n_blocks) return;
            try {
                fn(b, b * block_size, std::min(count, (b + 1) * block_size));
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        }
    };

    const int n_threads = static_cast<int>(std::min<std::size_t>(workers, n_blocks));
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace gs

#endif
