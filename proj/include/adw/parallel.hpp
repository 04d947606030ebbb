#pragma once

// Deterministic fork-join helpers. ADW_THREADS caps the worker count
// (0 or unset = hardware concurrency). Results never depend on the number of
// workers: parallel_find_first always reports the smallest hit index.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

namespace adw {

inline unsigned worker_count() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("ADW_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return hw;
}

// fn(i) for i in [0, n), partitioned into contiguous chunks.
template <typename Fn>
void parallel_for(size_t n, Fn&& fn) {
    unsigned workers = std::min<size_t>(worker_count(), n);
    if (workers <= 1) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    size_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        size_t lo = w * chunk, hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn]() {
            for (size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

// Smallest i in [0, n) with pred(i) true; chunks beyond an already-found hit
// are skipped, which cannot change the minimum.
template <typename Pred>
std::optional<size_t> parallel_find_first(size_t n, Pred&& pred) {
    unsigned workers = std::min<size_t>(worker_count(), n);
    if (n == 0) return std::nullopt;
    if (workers <= 1) {
        for (size_t i = 0; i < n; ++i)
            if (pred(i)) return i;
        return std::nullopt;
    }
    std::atomic<size_t> best{n};
    size_t chunk = std::max<size_t>(1, (n + workers * 8 - 1) / (workers * 8));
    std::atomic<size_t> next_chunk{0};
    size_t chunks = (n + chunk - 1) / chunk;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            for (;;) {
                size_t c = next_chunk.fetch_add(1);
                if (c >= chunks) return;
                size_t lo = c * chunk, hi = std::min(n, lo + chunk);
                if (lo >= best.load()) continue;
                for (size_t i = lo; i < hi && i < best.load(); ++i) {
                    if (pred(i)) {
                        size_t cur = best.load();
                        while (i < cur && !best.compare_exchange_weak(cur, i)) {}
                        break;
                    }
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    size_t found = best.load();
    if (found == n) return std::nullopt;
    return found;
}

} // namespace adw
