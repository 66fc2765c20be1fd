#pragma once

#include <cmath>

#include "pslab/base.hpp"

namespace pslab {

// Unevaluated sum hi + lo with |lo| <= ulp(hi)/2.  Built from the classical
// error-free transforms (two_sum, fma-based two_prod) over long double, so a
// value near 2^40 still carries ~2^-80 of fractional information.  This is
// what keeps frac(h * n^gamma) meaningful when the product is huge.
struct dd {
    ld hi{0};
    ld lo{0};
};

inline dd two_sum(ld a, ld b) {
    ld s = a + b;
    ld bb = s - a;
    ld err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline dd two_prod(ld a, ld b) {
    ld p = a * b;
    ld err = std::fma(a, b, -p);
    return {p, err};
}

inline dd dd_add(dd a, ld b) {
    dd s = two_sum(a.hi, b);
    s.lo += a.lo;
    dd r = two_sum(s.hi, s.lo);
    return r;
}

inline dd dd_add(dd a, dd b) {
    dd s = two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    return two_sum(s.hi, s.lo);
}

// a * b with integer a that is exactly representable; result renormalized.
inline dd dd_mul(ld a, ld b) {
    return two_prod(a, b);
}

// Fractional part of hi + lo in [0, 1).  floor() of a long double is exact,
// and the subtraction is exact by Sterbenz, so the only rounding left is the
// final fold of lo.
inline ld dd_frac(dd a) {
    ld f = a.hi - std::floor(a.hi);
    f += a.lo;
    f -= std::floor(f);
    if (f < 0) f += 1.0L;   // lo may push a tiny negative across the floor
    if (f >= 1.0L) f -= 1.0L;
    return f;
}

// frac(h * t) for integer h: the product is formed with its rounding error
// preserved, then reduced mod 1.
inline ld frac_of_product(i64 h, ld t) {
    dd p = two_prod(static_cast<ld>(h), t);
    return dd_frac(p);
}

}  // namespace pslab
