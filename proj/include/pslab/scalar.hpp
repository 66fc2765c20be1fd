#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "pslab/base.hpp"
#include "pslab/doubledouble.hpp"

namespace pslab {

inline void require_finite(ld t, const char* who) {
    if (!std::isfinite(static_cast<double>(t)))
        throw std::domain_error(std::string(who) + ": non-finite argument");
}

// Fractional part with the floor convention: frac(-0.25) = 0.75.
inline ld frac(ld t) {
    require_finite(t, "frac");
    ld f = t - std::floor(t);
    if (f >= 1.0L) f = 0.0L;   // rounding can land exactly on 1 for t just below an integer
    return f;
}

// Distance to the nearest integer, in [0, 1/2].
inline ld dist_nearest_int(ld t) {
    ld f = frac(t);
    return f <= 0.5L ? f : 1.0L - f;
}

// Sawtooth psi(t) = t - floor(t) - 1/2, values in [-1/2, 1/2).
inline ld psi(ld t) {
    return frac(t) - 0.5L;
}

struct unit_phase {
    double re;
    double im;

    std::complex<double> c() const { return {re, im}; }
};

// e(x) = exp(2 pi i x).  The argument is reduced mod 1 before any trig call;
// quarter turns are returned exactly so identities like e(1/2) = -1 survive
// equality tests.
inline unit_phase e_phase(ld x) {
    require_finite(x, "e_phase");
    ld r = frac(x);
    if (r == 0.0L) return {1.0, 0.0};
    if (r == 0.25L) return {0.0, 1.0};
    if (r == 0.5L) return {-1.0, 0.0};
    if (r == 0.75L) return {0.0, -1.0};
    if (r > 0.5L) r -= 1.0L;   // center on 0 to keep the trig argument small
    ld a = 2.0L * std::numbers::pi_v<ld> * r;
    return {static_cast<double>(std::cos(a)), static_cast<double>(std::sin(a))};
}

// e(h * t) for integer h, with the product reduced mod 1 in double-double so
// nothing is lost when |h * t| is large.
inline unit_phase e_phase_product(i64 h, ld t) {
    require_finite(t, "e_phase_product");
    return e_phase(frac_of_product(h, t));
}

inline std::complex<double> cis(ld x) { return e_phase(x).c(); }

}  // namespace pslab
