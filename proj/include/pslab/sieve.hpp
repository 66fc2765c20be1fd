#pragma once

#include <cmath>
#include <cstdint>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "pslab/base.hpp"
#include "pslab/integer_root.hpp"

namespace pslab {

inline constexpr u64 default_segment_size = u64(1) << 22;

// Primality, von Mangoldt and Moebius data for one half-open interval.
// A segment is immutable once built, so parallel consumers share it freely,
// and two segments covering the same range have identical content however
// they were scheduled.
struct segment {
    u64 lo = 0;
    u64 hi = 0;                    // exclusive
    std::vector<u8> is_prime;
    std::vector<double> lambda;    // log p at prime powers p^k, else 0
    std::vector<std::int8_t> mu;   // Moebius values in {-1, 0, 1}
};

// Primes up to `limit` by a plain sieve; grow-only cache shared across
// threads.  Callers receive a snapshot whose lifetime they own.
inline std::shared_ptr<const std::vector<u32>> base_primes(u64 limit) {
    static std::mutex guard;
    static std::shared_ptr<const std::vector<u32>> cache;
    static u64 cached_limit = 0;
    std::lock_guard<std::mutex> lock(guard);
    if (limit <= cached_limit && cache) return cache;
    u64 n = std::max<u64>(limit, 1024);
    std::vector<u8> composite(n + 1, 0);
    auto fresh = std::make_shared<std::vector<u32>>();
    for (u64 p = 2; p <= n; ++p) {
        if (composite[p]) continue;
        fresh->push_back(static_cast<u32>(p));
        for (u64 q = p * p; q <= n; q += p) composite[q] = 1;
    }
    cache = fresh;
    cached_limit = n;
    return cache;
}

// Primality flags for [lo, hi) without the factorization work; the cheap
// path for pure counting.
inline std::vector<u8> prime_mask(u64 lo, u64 hi) {
    if (lo < 2 || lo >= hi) throw std::domain_error("prime_mask: need 2 <= lo < hi");
    u64 len = hi - lo;
    std::vector<u8> mask(len, 1);
    u64 root = isqrt(hi - 1);
    auto primes = base_primes(root);
    for (u32 p : *primes) {
        if (static_cast<u64>(p) * p >= hi) break;
        u64 start = std::max<u64>(static_cast<u64>(p) * p, ((lo + p - 1) / p) * p);
        for (u64 q = start; q < hi; q += p) mask[q - lo] = 0;
    }
    for (u64 n = lo; n < hi && n < 2; ++n) mask[n - lo] = 0;
    return mask;
}

// Fully populated segment: primality plus Lambda and mu via factorization by
// the base primes.  Lambda(p^k) = log p, stored as the double log of the
// exact prime base; mu from the squarefree flag and the parity of the number
// of distinct prime factors.
inline segment sieve_range(u64 lo, u64 hi, u64 max_len = default_segment_size) {
    if (lo < 2 || lo >= hi) throw std::domain_error("sieve_range: need 2 <= lo < hi");
    if (hi - lo > max_len)
        throw capacity_error("sieve_range: segment longer than configured maximum");
    u64 len = hi - lo;
    segment seg;
    seg.lo = lo;
    seg.hi = hi;
    seg.is_prime.assign(len, 0);
    seg.lambda.assign(len, 0.0);
    seg.mu.assign(len, 0);

    std::vector<u64> rem(len);
    std::vector<u32> first(len, 0);      // smallest prime factor found, 0 if none yet
    std::vector<u8> distinct(len, 0);
    std::vector<u8> squarefull(len, 0);  // some p^2 divides n
    for (u64 i = 0; i < len; ++i) rem[i] = lo + i;

    u64 root = isqrt(hi - 1);
    auto primes = base_primes(root);
    for (u32 p : *primes) {
        if (static_cast<u64>(p) > root) break;
        u64 start = ((lo + p - 1) / p) * p;
        for (u64 q = start; q < hi; q += p) {
            u64 i = q - lo;
            u8 e = 0;
            while (rem[i] % p == 0) { rem[i] /= p; ++e; }
            if (first[i] == 0) first[i] = p;
            ++distinct[i];
            if (e >= 2) squarefull[i] = 1;
        }
    }

    for (u64 i = 0; i < len; ++i) {
        u64 n = lo + i;
        u8 total = distinct[i] + (rem[i] > 1 ? 1 : 0);
        // prime: untouched by every base prime, or itself a base prime
        seg.is_prime[i] = (rem[i] == n || static_cast<u64>(first[i]) == n) ? 1 : 0;
        if (total == 1) {
            u64 base = first[i] ? first[i] : n;
            seg.lambda[i] = std::log(static_cast<double>(base));
        }
        seg.mu[i] = squarefull[i] ? 0 : ((total % 2 == 0) ? 1 : -1);
    }
    return seg;
}

// Calls fn(p) for every prime p <= x in ascending order.
template <class Fn>
void primes_up_to(u64 x, Fn&& fn, u64 seg_size = default_segment_size) {
    if (x < 2) throw std::domain_error("primes_up_to: x >= 2 required");
    for (u64 lo = 2; lo <= x; lo += seg_size) {
        u64 hi = std::min(x + 1, lo + seg_size);
        auto mask = prime_mask(lo, hi);
        for (u64 n = lo; n < hi; ++n)
            if (mask[n - lo]) fn(n);
    }
}

inline std::vector<u64> primes_vector(u64 x) {
    std::vector<u64> out;
    primes_up_to(x, [&](u64 p) { out.push_back(p); });
    return out;
}

inline u64 prime_count(u64 x) {
    u64 c = 0;
    primes_up_to(x, [&](u64) { ++c; });
    return c;
}

// Ascending (n, Lambda(n)) pairs with Lambda(n) != 0 on [lo, hi).
inline std::vector<std::pair<u64, double>> mangoldt_range(u64 lo, u64 hi,
                                                          u64 seg_size = default_segment_size) {
    if (lo < 2 || lo >= hi) throw std::domain_error("mangoldt_range: need 2 <= lo < hi");
    std::vector<std::pair<u64, double>> out;
    for (u64 a = lo; a < hi; a += seg_size) {
        u64 b = std::min(hi, a + seg_size);
        segment seg = sieve_range(a, b, seg_size);
        for (u64 n = a; n < b; ++n)
            if (seg.lambda[n - a] != 0.0) out.emplace_back(n, seg.lambda[n - a]);
    }
    return out;
}

}  // namespace pslab
