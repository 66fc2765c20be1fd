#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>

#include "pslab/base.hpp"

namespace pslab {

using bigint = boost::multiprecision::cpp_int;

inline bigint ipow(u64 base, u64 exp) {
    return boost::multiprecision::pow(bigint(base), static_cast<unsigned>(exp));
}

// Largest r with r^k <= x.  A float estimate seeds the answer and integer
// comparisons walk it onto the exact floor; the walk is a couple of steps at
// most since long double is good to ~18 digits.
inline bigint iroot_floor(const bigint& x, u64 k) {
    if (x < 0) throw std::domain_error("iroot_floor: negative radicand");
    if (x == 0) return 0;
    if (k == 0) throw std::domain_error("iroot_floor: zeroth root");
    if (k == 1) return x;
    ld est = std::pow(x.convert_to<ld>(), 1.0L / static_cast<ld>(k));
    bigint r = static_cast<bigint>(est);
    if (r < 1) r = 1;
    while (boost::multiprecision::pow(r, static_cast<unsigned>(k)) > x) --r;
    while (boost::multiprecision::pow(r + 1, static_cast<unsigned>(k)) <= x) ++r;
    return r;
}

inline u64 isqrt(u64 n) {
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

}  // namespace pslab
