#pragma once

#include <cmath>
#include <stdexcept>

#include "pslab/base.hpp"

namespace pslab {

// Adaptive Gauss-Kronrod 7/15 on [a, b].  The embedded Gauss-7 value prices
// each panel's error for free; panels split until the local estimate fits
// inside its share of the requested relative tolerance.  Depth is capped so a
// hostile integrand terminates instead of recursing forever.
namespace gk {

// Kronrod-15 abscissae (positive half) and weights; Gauss-7 weights sit at
// the odd Kronrod nodes.
inline constexpr double xk[8] = {
    0.0,
    0.2077849550078985, 0.4058451513773972, 0.5860872354676911,
    0.7415311855993945, 0.8648644233597691, 0.9491079123427585,
    0.9914553711208126};
inline constexpr double wk[8] = {
    0.2094821410847278,
    0.2044329400752989, 0.1903505780647854, 0.1690047266392679,
    0.1406532597155259, 0.1047900103222502, 0.0630920926299786,
    0.0229353220105292};
inline constexpr double wg[4] = {
    0.4179591836734694, 0.3818300505051189, 0.2797053914892767,
    0.1294849661688697};

template <class F>
void panel(F&& f, ld a, ld b, ld& kron, ld& gauss) {
    ld c = 0.5L * (a + b);
    ld h = 0.5L * (b - a);
    ld fc = f(c);
    kron = wk[0] * fc;
    gauss = wg[0] * fc;
    for (int i = 1; i < 8; ++i) {
        ld fx = f(c - h * xk[i]) + f(c + h * xk[i]);
        kron += wk[i] * fx;
        if (i % 2 == 0) gauss += wg[i / 2] * fx;
    }
    kron *= h;
    gauss *= h;
}

template <class F>
ld adapt(F&& f, ld a, ld b, ld tol_abs, int depth) {
    ld k, g;
    panel(f, a, b, k, g);
    ld err = std::fabs(k - g);
    if (err <= tol_abs || depth >= 48) return k;
    ld c = 0.5L * (a + b);
    return adapt(f, a, c, 0.5L * tol_abs, depth + 1) +
           adapt(f, c, b, 0.5L * tol_abs, depth + 1);
}

}  // namespace gk

// Integral of f over [a, b] to relative tolerance rel_tol.  A first pass
// sizes the absolute budget from a coarse whole-interval estimate.
template <class F>
ld integrate(F&& f, ld a, ld b, ld rel_tol = 1e-10L) {
    if (!(a <= b)) throw std::domain_error("integrate: reversed interval");
    if (a == b) return 0.0L;
    ld k, g;
    gk::panel(f, a, b, k, g);
    ld scale = std::fabs(k);
    if (scale < 1e-300L) scale = 1e-300L;
    return gk::adapt(f, a, b, rel_tol * scale, 0);
}

}  // namespace pslab
