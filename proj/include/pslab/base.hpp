#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pslab {

using u8  = std::uint8_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using i128 = __int128;
using ld  = long double;

// Requested range exceeds a configured capacity (e.g. sieve segment size).
struct capacity_error : std::length_error {
    using std::length_error::length_error;
};

// A checker's analytic hypothesis fails on the supplied input; the message
// names the violated condition.
struct hypothesis_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An iterative numeric procedure failed to converge.
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace pslab
