#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace qdesign {

inline unsigned default_threads() {
    unsigned n = std::thread::hardware_concurrency();
    return n ? n : 1;
}

struct IndexRange {
    std::uint64_t begin = 0;
    std::uint64_t end = 0;
    std::uint64_t size() const { return end - begin; }
};

// Splits [0, total) into at most `parts` contiguous nonempty ranges.
inline std::vector<IndexRange> partition_range(std::uint64_t total, std::uint64_t parts) {
    std::vector<IndexRange> out;
    if (total == 0) return out;
    parts = std::clamp<std::uint64_t>(parts, 1, total);
    std::uint64_t base = total / parts, extra = total % parts, at = 0;
    for (std::uint64_t i = 0; i < parts; ++i) {
        std::uint64_t len = base + (i < extra ? 1 : 0);
        out.push_back({at, at + len});
        at += len;
    }
    return out;
}

// Runs fn(range, worker) on disjoint ranges covering [0, total).
// Worker 0 runs on the calling thread; the first exception is rethrown.
template <class Fn>
void parallel_for(std::uint64_t total, unsigned threads, Fn&& fn) {
    auto ranges = partition_range(total, std::max(1u, threads));
    if (ranges.size() <= 1) {
        if (!ranges.empty()) fn(ranges[0], 0u);
        return;
    }
    std::vector<std::exception_ptr> errors(ranges.size());
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < ranges.size(); ++w) {
        pool.emplace_back([&, w] {
            try {
                fn(ranges[w], w);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    try {
        fn(ranges[0], 0u);
    } catch (...) {
        errors[0] = std::current_exception();
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace qdesign
