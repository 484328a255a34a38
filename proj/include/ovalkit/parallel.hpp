#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace ovk {

// Chunked parallel loop over [begin, end): workers steal fixed-size chunks
// off a shared atomic counter. `body(i)` must be pure w.r.t. shared state.
template <typename Body>
void parallel_for(std::size_t begin, std::size_t end, unsigned threads, std::size_t chunk,
                  const Body& body) {
    if (threads <= 1 || end - begin <= chunk) {
        for (std::size_t i = begin; i < end; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{begin};
    auto worker = [&] {
        for (;;) {
            const std::size_t lo = next.fetch_add(chunk);
            if (lo >= end) return;
            const std::size_t hi = lo + chunk < end ? lo + chunk : end;
            for (std::size_t i = lo; i < hi; ++i) body(i);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
}

inline unsigned default_threads() {
    const unsigned hc = std::thread::hardware_concurrency();
    return hc ? hc : 1;
}

}  // namespace ovk
