#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace rejodds::math {

// Fixed-size chunk scheduling over [0, n). fn(chunk_index, begin, end) must
// write only chunk-local state; the caller combines chunk results in index
// order, so the outcome does not depend on the number of workers.
template <class Fn>
void for_each_chunk(std::uint64_t n, std::uint64_t chunk_size, unsigned threads, Fn&& fn) {
    if (n == 0) return;
    const std::uint64_t n_chunks = (n + chunk_size - 1) / chunk_size;
    unsigned workers = threads != 0 ? threads : std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, n_chunks));

    if (workers <= 1) {
        for (std::uint64_t c = 0; c < n_chunks; ++c)
            fn(c, c * chunk_size, std::min(n, (c + 1) * chunk_size));
        return;
    }

    std::atomic<std::uint64_t> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                std::uint64_t c = next.fetch_add(1);
                if (c >= n_chunks || failed.load()) break;
                try {
                    fn(c, c * chunk_size, std::min(n, (c + 1) * chunk_size));
                } catch (...) {
                    if (!failed.exchange(true)) error = std::current_exception();
                    break;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace rejodds::math
