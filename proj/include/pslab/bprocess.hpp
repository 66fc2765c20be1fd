#pragma once

#include <cmath>
#include <complex>
#include <string>

#include "pslab/accum.hpp"
#include "pslab/base.hpp"
#include "pslab/doubledouble.hpp"
#include "pslab/lemma_report.hpp"
#include "pslab/lemmas.hpp"
#include "pslab/phase.hpp"
#include "pslab/scalar.hpp"

namespace pslab {

// Stationary-phase (van der Corput B-process) transform of a weighted
// exponential sum.  For f with f'' > 0 of constant sign on [a, b] and weight
// g, the sum over n in (a, b] transforms into a sum over the dual variable
// v = f'(n):
//
//   sum g(n) e(f(n)) = sum_{alpha < v <= beta} b_v g(n_v) / sqrt(f''(n_v))
//                        * e(f(n_v) - v n_v + 1/8)  +  error,
//
// where [alpha, beta] is the image of [a, b] under f', n_v solves
// f'(n_v) = v, b_v halves at integer endpoints, and the error admits
//
//   G log(beta - alpha + 2) + U^{-1} G (b - a + D)
//     + G min(sqrt(D), 1/||alpha||) + G min(sqrt(D), 1/||beta||)
//
// with |f''| ~ 1/D, |f'''| << 1/(DU), |g| <= G.  For f'' < 0 the identity is
// applied to -f and conjugated.  D is taken as 1/max|f''| and U from the
// actual third-derivative maximum, the tightest reading of the ~/<< scales.
struct b_process_result {
    std::complex<double> direct{0, 0};
    std::complex<double> transformed{0, 0};
    double residual = 0;
    double envelope = 0;
    u64 term_count = 0;
    double alpha = 0;        // dual endpoints for f'' > 0 orientation
    double beta = 0;
    lemma_check_report report;
};

namespace detail {

// Solves fprime(x) = v for increasing fprime on [lo, hi]: Newton steps with a
// maintained bracket, bisection whenever Newton strays or stalls.
template <class F1, class F2>
ld solve_dual(F1&& fprime, F2&& fsecond, ld lo, ld hi, ld v, ld tol) {
    ld x = 0.5L * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        ld fx = fprime(x) - v;
        if (std::fabs(fx) <= tol) return x;
        if (fx > 0) hi = x; else lo = x;
        ld d = fsecond(x);
        ld step = d != 0 ? x - fx / d : x;
        x = (step > lo && step < hi) ? step : 0.5L * (lo + hi);
        if (hi - lo <= std::numeric_limits<ld>::epsilon() * std::fabs(hi)) return x;
    }
    if (std::fabs(fprime(x) - v) <= tol * 100) return x;
    throw numeric_error("dual-point solve failed to converge in [" +
                        std::to_string(static_cast<double>(lo)) + ", " +
                        std::to_string(static_cast<double>(hi)) + "] for v = " +
                        std::to_string(static_cast<double>(v)));
}

}  // namespace detail

inline b_process_result b_process(const phase_spec& f, const phase_spec& weight, u64 a, u64 b,
                                  double slack = 5.0) {
    if (!(a < b)) throw std::invalid_argument("b_process: need a < b");

    auto d2 = detail::deriv_grid(f, static_cast<ld>(a), static_cast<ld>(b), 2, 513);
    if (!detail::sign_constant(d2))
        throw hypothesis_error("second derivative changes sign on the range");
    bool concave = d2.front() < 0;
    // Work with F = f or -f so the curvature is positive; conjugate at the end.
    phase_spec F = concave ? f.negated() : f;

    auto d3 = detail::deriv_grid(f, static_cast<ld>(a), static_cast<ld>(b), 3, 513);
    ld max_f2 = detail::max_abs(d2);
    ld min_f2 = detail::min_abs(d2);
    ld max_f3 = detail::max_abs(d3);
    ld D = 1.0L / max_f2;
    ld U = max_f3 > 0 ? std::max(1.0L, max_f2 / max_f3) : 1e30L;
    (void)min_f2;

    ld G = 0;
    for (u64 n = a + 1; n <= b; ++n) G = std::max(G, std::fabs(weight.eval(static_cast<ld>(n))));
    if (G == 0) G = 1;

    // Direct side.
    kbn_complex_sum<double> direct;
    for (u64 n = a + 1; n <= b; ++n) {
        auto ph = e_phase(f.eval_mod1(static_cast<ld>(n))).c();
        direct.add(ph * std::complex<double>(static_cast<double>(weight.eval(static_cast<ld>(n))), 0));
    }

    // Dual range under the increasing derivative of F.
    ld alpha = F.deriv(static_cast<ld>(a), 1);
    ld beta = F.deriv(static_cast<ld>(b), 1);
    if (!(alpha < beta))
        throw hypothesis_error("first derivative is not strictly monotone on the range");

    ld vtol = 1e-12L * std::max(1.0L, std::fabs(beta));
    i64 v_lo = static_cast<i64>(std::ceil(static_cast<double>(alpha)));
    i64 v_hi = static_cast<i64>(std::floor(static_cast<double>(beta)));
    const ld end_eps = 1e-9L;

    kbn_complex_sum<double> dual;
    u64 terms = 0;
    for (i64 v = v_lo; v <= v_hi; ++v) {
        ld bv = 1.0L;
        if (std::fabs(alpha - v) < end_eps || std::fabs(beta - v) < end_eps) bv = 0.5L;
        ld nv = detail::solve_dual([&](ld x) { return F.deriv(x, 1); },
                                   [&](ld x) { return F.deriv(x, 2); },
                                   static_cast<ld>(a), static_cast<ld>(b),
                                   static_cast<ld>(v), vtol);
        ld f2v = F.deriv(nv, 2);
        ld amp = bv * weight.eval(nv) / std::sqrt(std::fabs(f2v));
        // Phase F(n_v) - v n_v + 1/8, assembled in double-double: both parts
        // can be thousands of cycles while the answer needs their mod-1 sum.
        dd phase = two_prod(-static_cast<ld>(v), nv);
        phase = dd_add(phase, F.eval(nv));
        phase = dd_add(phase, 0.125L);
        auto ph = e_phase(dd_frac(phase)).c();
        dual.add(ph * std::complex<double>(static_cast<double>(amp), 0));
        ++terms;
    }

    std::complex<double> transformed = dual.value();
    if (concave) transformed = std::conj(transformed);

    b_process_result out;
    out.direct = direct.value();
    out.transformed = transformed;
    out.residual = std::abs(out.direct - out.transformed);
    out.term_count = terms;
    out.alpha = static_cast<double>(alpha);
    out.beta = static_cast<double>(beta);

    ld da = dist_nearest_int(alpha);
    ld db = dist_nearest_int(beta);
    ld sqrtD = std::sqrt(D);
    ld boundary = G * (da == 0 ? sqrtD : std::min(sqrtD, 1.0L / da)) +
                  G * (db == 0 ? sqrtD : std::min(sqrtD, 1.0L / db));
    ld env = G * std::log(beta - alpha + 2.0L) +
             (1.0L / U) * G * (static_cast<ld>(b - a) + D) + boundary;
    out.envelope = static_cast<double>(env);

    out.report = make_report("bprocess",
                             {{"a", static_cast<double>(a)},
                              {"b", static_cast<double>(b)},
                              {"alpha", out.alpha},
                              {"beta", out.beta},
                              {"D", static_cast<double>(D)},
                              {"U", static_cast<double>(U)},
                              {"G", static_cast<double>(G)},
                              {"terms", static_cast<double>(terms)}},
                             out.residual, out.envelope, slack);
    return out;
}

}  // namespace pslab
