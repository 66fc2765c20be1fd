#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

#include "pslab/base.hpp"

namespace pslab {

// Deterministic fork-join helper.  Work is split into items indexed
// 0..count-1; workers pull indices from an atomic counter and write results
// into per-index slots, so the caller can fold them in index order.  The
// numeric outcome therefore does not depend on the worker count or on
// scheduling, only on how the caller chose the items.
class worker_pool {
public:
    explicit worker_pool(unsigned threads) : threads_(threads ? threads : 1) {}

    unsigned threads() const { return threads_; }

    // fn(i) is called exactly once for every i in [0, count).
    template <class Fn>
    void run(std::size_t count, Fn&& fn) const {
        if (count == 0) return;
        unsigned n = threads_;
        if (static_cast<std::size_t>(n) > count) n = static_cast<unsigned>(count);
        if (n <= 1) {
            for (std::size_t i = 0; i < count; ++i) fn(i);
            return;
        }
        std::atomic<std::size_t> next{0};
        std::exception_ptr first_error;
        std::atomic<bool> failed{false};
        std::vector<std::thread> crew;
        crew.reserve(n);
        for (unsigned t = 0; t < n; ++t) {
            crew.emplace_back([&] {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= count || failed.load()) return;
                    try {
                        fn(i);
                    } catch (...) {
                        if (!failed.exchange(true)) first_error = std::current_exception();
                        return;
                    }
                }
            });
        }
        for (auto& th : crew) th.join();
        if (failed.load()) std::rethrow_exception(first_error);
    }

private:
    unsigned threads_;
};

// Splits [lo, hi) into fixed-width chunks, maps fn over them in parallel and
// returns the per-chunk results in ascending chunk order.  The chunk width is
// part of the numeric contract: it never adapts to the worker count, so folds
// over the result are bit-identical for any pool size.
template <class R, class Fn>
std::vector<R> chunked_map(const worker_pool& pool, u64 lo, u64 hi, u64 chunk, Fn&& fn) {
    std::vector<R> out;
    if (hi <= lo) return out;
    u64 n_chunks = (hi - lo + chunk - 1) / chunk;
    out.resize(n_chunks);
    pool.run(n_chunks, [&](std::size_t i) {
        u64 a = lo + static_cast<u64>(i) * chunk;
        u64 b = a + chunk < hi ? a + chunk : hi;
        out[i] = fn(a, b);
    });
    return out;
}

}  // namespace pslab
