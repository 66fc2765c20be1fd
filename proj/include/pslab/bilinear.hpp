#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "pslab/accum.hpp"
#include "pslab/base.hpp"
#include "pslab/doubledouble.hpp"
#include "pslab/parallel.hpp"
#include "pslab/phase.hpp"
#include "pslab/rational.hpp"
#include "pslab/scalar.hpp"
#include "pslab/sieve.hpp"

namespace pslab {

// Bilinear exponential sums with the two-frequency phase
//
//   f(n) = h1 n^{gamma1} + h2 n^{gamma2},
//
// the shape that appears after expanding the indicator of membership in two
// Piatetski-Shapiro sets into Fourier series.  Type I sums carry a free
// smooth variable (b identically 1); type II sums carry bounded coefficients
// on both variables.  The governing frequency scale is
//
//   R = |h1| X^{gamma1} + |h2| X^{gamma2},
//
// and the bilinear estimates apply when the inner range N sits inside the
// window X^{2/11 + 8 eps} << N << X^{16/11 - 24 eps} R^{-1}.

enum class coeff_kind { unit, mu_signs, random_unimodular };

// Deterministic coefficient sequence on (M, 2M]: index i holds the value for
// m = M + 1 + i.  The seeded variant draws phases from a fixed-stride stream
// so the sequence depends only on (kind, seed, M), never on thread count.
inline std::vector<std::complex<double>> make_coefficients(coeff_kind kind, u64 M, u64 seed) {
    std::vector<std::complex<double>> a(M);
    switch (kind) {
        case coeff_kind::unit:
            for (u64 i = 0; i < M; ++i) a[i] = {1, 0};
            break;
        case coeff_kind::mu_signs: {
            auto seg = sieve_range(M + 1, 2 * M + 1, M);
            for (u64 i = 0; i < M; ++i) a[i] = {static_cast<double>(seg.mu[i]), 0};
            break;
        }
        case coeff_kind::random_unimodular: {
            std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
            for (u64 i = 0; i < M; ++i) {
                double u = static_cast<double>(rng() >> 11) * 0x1p-53;
                a[i] = e_phase(static_cast<ld>(u)).c();
            }
            break;
        }
    }
    return a;
}

struct bilinear_spec {
    u64 M = 0;               // outer variable m in (M, 2M]
    u64 N = 0;               // inner variable n in (N, 2N]
    i64 h1 = 1;
    i64 h2 = 1;
    gamma_pair gammas;
    coeff_kind a_kind = coeff_kind::unit;
    coeff_kind b_kind = coeff_kind::unit;
    u64 seed = 1;

    bilinear_spec(u64 m, u64 n, i64 h1_, i64 h2_, gamma_pair g)
        : M(m), N(n), h1(h1_), h2(h2_), gammas(g) {
        if (M == 0 || N == 0) throw std::invalid_argument("bilinear_spec: empty range");
        if (h1 == 0 && h2 == 0) throw std::invalid_argument("bilinear_spec: both frequencies zero");
    }

    double X() const { return static_cast<double>(M) * static_cast<double>(N); }

    // R = |h1| X^{gamma1} + |h2| X^{gamma2} at the product scale X = M N.
    double frequency_scale() const {
        double x = X();
        return std::fabs(static_cast<double>(h1)) * std::pow(x, gammas.g1().value()) +
               std::fabs(static_cast<double>(h2)) * std::pow(x, gammas.g2().value());
    }

    // Whether N lies in the admissible bilinear window for slack eps.
    bool inner_range_in_window(double eps) const {
        double x = X();
        double lo = std::pow(x, 2.0 / 11.0 + 8.0 * eps);
        double hi = std::pow(x, 16.0 / 11.0 - 24.0 * eps) / frequency_scale();
        double n = static_cast<double>(N);
        return lo <= n && n <= hi;
    }
};

namespace detail {

// Phase h1 t^{gamma1} + h2 t^{gamma2} mod 1, each product split by
// double-double so integer multiples of large powers cancel exactly.
inline ld two_power_phase_mod1(ld t, i64 h1, i64 h2, const gamma_pair& g) {
    ld r = 0;
    if (h1 != 0) r += frac_of_product(h1, std::pow(t, g.g1().value_ld()));
    if (h2 != 0) r += frac_of_product(h2, std::pow(t, g.g2().value_ld()));
    return frac(r);
}

}  // namespace detail

// S_II = sum_{M < m <= 2M} sum_{N < n <= 2N} a(m) b(n) e(f(mn)).
// Chunked over m with a fixed width so the fold order, and hence every bit of
// the result, is independent of the worker count.
inline std::complex<double> type_II_sum(const bilinear_spec& spec, worker_pool& pool) {
    auto a = make_coefficients(spec.a_kind, spec.M, spec.seed);
    auto b = make_coefficients(spec.b_kind, spec.N, spec.seed + 1);

    const u64 chunk = 64;
    auto parts = chunked_map<kbn_complex_sum<double>>(
        pool, 0, spec.M, chunk, [&](u64 lo, u64 hi) {
            kbn_complex_sum<double> acc;
            for (u64 i = lo; i < hi; ++i) {
                u64 m = spec.M + 1 + i;
                kbn_complex_sum<double> inner;
                for (u64 j = 0; j < spec.N; ++j) {
                    u64 n = spec.N + 1 + j;
                    ld t = static_cast<ld>(m) * static_cast<ld>(n);
                    auto ph = e_phase(detail::two_power_phase_mod1(t, spec.h1, spec.h2, spec.gammas));
                    inner.add(ph.c() * b[j]);
                }
                acc.add(inner.value() * a[i]);
            }
            return acc;
        });

    kbn_complex_sum<double> total;
    for (auto& p : parts) total.add(p.value());
    return total.value();
}

// Type I specializes the inner coefficients to 1.
inline std::complex<double> type_I_sum(bilinear_spec spec, worker_pool& pool) {
    spec.b_kind = coeff_kind::unit;
    return type_II_sum(spec, pool);
}

// T* = sum_{X < n <= X1} Lambda(n) e(h1 n^{gamma1} + h2 n^{gamma2}),
// the von Mangoldt-weighted sum the bilinear machinery ultimately bounds.
inline std::complex<double> prime_exp_sum(u64 X, u64 X1, i64 h1, i64 h2, const gamma_pair& g,
                                          worker_pool& pool,
                                          u64 segment = default_segment_size) {
    if (!(X < X1)) throw std::invalid_argument("prime_exp_sum: need X < X1");
    if (X1 > 2 * X) throw std::invalid_argument("prime_exp_sum: need X1 <= 2X");
    if (h1 == 0 || h2 == 0)
        throw std::invalid_argument("prime_exp_sum: frequencies must be nonzero");

    auto parts = chunked_map<kbn_complex_sum<double>>(
        pool, X + 1, X1 + 1, segment, [&](u64 lo, u64 hi) {
            kbn_complex_sum<double> acc;
            for (auto [n, w] : mangoldt_range(lo, hi, segment)) {
                auto ph = e_phase(detail::two_power_phase_mod1(static_cast<ld>(n), h1, h2, g));
                acc.add(ph.c() * std::complex<double>(w, 0));
            }
            return acc;
        });

    kbn_complex_sum<double> total;
    for (auto& p : parts) total.add(p.value());
    return total.value();
}

}  // namespace pslab
