#pragma once

#include <cmath>
#include <optional>

#include "pslab/base.hpp"
#include "pslab/integer_root.hpp"
#include "pslab/rational.hpp"

namespace pslab {

// Membership machinery for the floor-power set F_gamma = {floor(n^{1/gamma})}.
//
// p equals floor(n^{1/gamma}) for some n exactly when the interval
// [p^gamma, (p+1)^gamma) contains an integer, and since the interval is
// shorter than 1 (gamma < 1) that integer is unique.  With gamma = a/b the
// test is integer arithmetic throughout:
//
//   n0 = ceil(p^{a/b})  via  k = floor((p^a)^{1/b}),  n0 = k + [k^b < p^a]
//   p in F_gamma  <=>  n0^b < (p+1)^a
//
// The bigint route is exact but costs big-integer powers, so the counting
// paths first try long double.  At p <= 10^8 the computed p^gamma is within
// ~1e-10 of the true value; whenever the fractional parts stay farther than
// margin (1e-6) from 0 and 1 the float decision is provably the exact one,
// and otherwise we fall back to integers.  The margin test itself only needs
// to be approximately right: near-boundary cases just take the slow route.

inline constexpr ld ps_float_margin = 1e-6L;

// Exact membership witness: the unique n with p^gamma <= n < (p+1)^gamma.
inline std::optional<u64> ps_member(u64 p, const gamma_exponent& g) {
    if (p < 1) throw std::domain_error("ps_member: p >= 1 required");
    bigint pa = ipow(p, g.num());
    bigint k = iroot_floor(pa, g.den());
    bigint n0 = k;
    if (boost::multiprecision::pow(k, static_cast<unsigned>(g.den())) < pa) n0 = k + 1;
    bigint p1a = ipow(p + 1, g.num());
    if (boost::multiprecision::pow(n0, static_cast<unsigned>(g.den())) < p1a)
        return n0.convert_to<u64>();
    return std::nullopt;
}

// floor(p^{num/den}) exactly.
inline u64 floor_pow(u64 p, const gamma_exponent& g) {
    if (p < 1) throw std::domain_error("floor_pow: p >= 1 required");
    return iroot_floor(ipow(p, g.num()), g.den()).convert_to<u64>();
}

// Float-first membership test, exact-fallback on boundary proximity.
inline bool ps_member_fast(u64 p, const gamma_exponent& g) {
    ld gv = g.value_ld();
    ld t0 = std::pow(static_cast<ld>(p), gv);
    ld t1 = std::pow(static_cast<ld>(p + 1), gv);
    ld f0 = t0 - std::floor(t0);
    ld f1 = t1 - std::floor(t1);
    bool risky = f0 < ps_float_margin || f0 > 1.0L - ps_float_margin ||
                 f1 < ps_float_margin || f1 > 1.0L - ps_float_margin;
    if (!risky) {
        // ceil(t0) < t1 decides; both floors are trustworthy here.
        return std::floor(t1) >= std::floor(t0) + 1.0L;
    }
    return ps_member(p, g).has_value();
}

// floor(n^{den/num}): the inverse-exponent floor used when enumerating the
// set by its witnesses.  Same float-first scheme.
inline u64 inv_floor_pow_fast(u64 n, const gamma_exponent& g) {
    ld inv = static_cast<ld>(g.den()) / static_cast<ld>(g.num());
    ld t = std::pow(static_cast<ld>(n), inv);
    ld f = t - std::floor(t);
    if (f >= ps_float_margin && f <= 1.0L - ps_float_margin)
        return static_cast<u64>(t);
    return iroot_floor(ipow(n, g.den()), g.num()).convert_to<u64>();
}

}  // namespace pslab
