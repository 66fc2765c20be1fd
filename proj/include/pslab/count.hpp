#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "pslab/accum.hpp"
#include "pslab/parallel.hpp"
#include "pslab/ps_set.hpp"
#include "pslab/quadrature.hpp"
#include "pslab/rational.hpp"
#include "pslab/scalar.hpp"
#include "pslab/sieve.hpp"

namespace pslab {

using quadfloat = boost::multiprecision::cpp_bin_float_quad;

// ---------------------------------------------------------------------------
// Exact counting.
//
// pi_gamma walks primes and applies the interval membership test; the dual
// counter walks the set itself (witnesses n, values floor(n^{1/gamma})) and
// tests primality.  The two enumerate completely different objects, so exact
// agreement is a strong end-to-end check of the arithmetic.
// ---------------------------------------------------------------------------

inline u64 pi_gamma(u64 x, const gamma_exponent& g, const worker_pool& pool = worker_pool(1),
                    u64 seg_size = default_segment_size) {
    if (x < 2) throw std::domain_error("pi_gamma: x >= 2 required");
    if (!g.above_half()) throw std::domain_error("pi_gamma: gamma > 1/2 required");
    auto partials = chunked_map<u64>(pool, 2, x + 1, seg_size, [&](u64 a, u64 b) {
        auto mask = prime_mask(a, b);
        u64 c = 0;
        for (u64 p = a; p < b; ++p)
            if (mask[p - a] && ps_member_fast(p, g)) ++c;
        return c;
    });
    u64 total = 0;
    for (u64 c : partials) total += c;
    return total;
}

// Primality flags for [0, x] as a packed bitmap.
inline std::vector<bool> prime_bitmap(u64 x) {
    std::vector<bool> flags(x + 1, false);
    primes_up_to(x, [&](u64 p) { flags[p] = true; });
    return flags;
}

inline u64 pi_gamma_dual(u64 x, const gamma_exponent& g) {
    if (x < 2) throw std::domain_error("pi_gamma_dual: x >= 2 required");
    if (!g.above_half()) throw std::domain_error("pi_gamma_dual: gamma > 1/2 required");
    auto flags = prime_bitmap(x);
    u64 count = 0;
    // floor(n^{1/gamma}) is strictly increasing (consecutive values differ by
    // more than 1/gamma > 1), so no dedup is needed.
    for (u64 n = 1;; ++n) {
        u64 p = inv_floor_pow_fast(n, g);
        if (p > x) break;
        if (flags[p]) ++count;
    }
    return count;
}

inline void check_distinct(const std::vector<gamma_exponent>& gs) {
    for (std::size_t i = 0; i < gs.size(); ++i)
        for (std::size_t j = i + 1; j < gs.size(); ++j)
            if (gs[i] == gs[j])
                throw std::invalid_argument("duplicate gamma: " + gs[i].str());
}

inline u64 pi_intersect(u64 x, const std::vector<gamma_exponent>& gs,
                        const worker_pool& pool = worker_pool(1),
                        u64 seg_size = default_segment_size) {
    if (x < 2) throw std::domain_error("pi_intersect: x >= 2 required");
    if (gs.empty()) throw std::invalid_argument("pi_intersect: at least one gamma");
    check_distinct(gs);
    for (const auto& g : gs)
        if (!g.above_half()) throw std::domain_error("pi_intersect: gamma > 1/2 required");
    auto partials = chunked_map<u64>(pool, 2, x + 1, seg_size, [&](u64 a, u64 b) {
        auto mask = prime_mask(a, b);
        u64 c = 0;
        for (u64 p = a; p < b; ++p) {
            if (!mask[p - a]) continue;
            bool all = true;
            for (const auto& g : gs)
                if (!ps_member_fast(p, g)) { all = false; break; }
            if (all) ++c;
        }
        return c;
    });
    u64 total = 0;
    for (u64 c : partials) total += c;
    return total;
}

// Independent route: enumerate witnesses of the sparsest set, test primality
// and the remaining memberships.
inline u64 pi_intersect_dual(u64 x, const std::vector<gamma_exponent>& gs) {
    if (x < 2) throw std::domain_error("pi_intersect_dual: x >= 2 required");
    if (gs.empty()) throw std::invalid_argument("pi_intersect_dual: at least one gamma");
    check_distinct(gs);
    std::size_t lead = 0;
    for (std::size_t i = 1; i < gs.size(); ++i)
        if (gs[i] < gs[lead]) lead = i;
    auto flags = prime_bitmap(x);
    u64 count = 0;
    for (u64 n = 1;; ++n) {
        u64 p = inv_floor_pow_fast(n, gs[lead]);
        if (p > x) break;
        if (p < 2 || !flags[p]) continue;
        bool all = true;
        for (std::size_t i = 0; i < gs.size(); ++i)
            if (i != lead && !ps_member_fast(p, gs[i])) { all = false; break; }
        if (all) ++count;
    }
    return count;
}

// ---------------------------------------------------------------------------
// Analytic terms.
// ---------------------------------------------------------------------------

// (prod gamma_i) * integral_2^x t^{sum gamma_i - k} / log t dt, the predicted
// count of primes lying in all k sets.  Adaptive quadrature, relative
// tolerance 1e-10.
inline double main_term_general(double x, const std::vector<gamma_exponent>& gs,
                                ld rel_tol = 1e-10L) {
    if (x < 2) throw std::domain_error("main_term: x >= 2 required");
    if (gs.empty()) throw std::invalid_argument("main_term: at least one gamma");
    if (x == 2) return 0.0;
    ld expo = -static_cast<ld>(gs.size());
    ld coeff = 1.0L;
    for (const auto& g : gs) {
        expo += g.value_ld();
        coeff *= g.value_ld();
    }
    ld integral = integrate([expo](ld t) { return std::pow(t, expo) / std::log(t); },
                            2.0L, static_cast<ld>(x), rel_tol);
    return static_cast<double>(coeff * integral);
}

inline double main_term(double x, const gamma_pair& pair, ld rel_tol = 1e-10L) {
    return main_term_general(x, {pair.g1(), pair.g2()}, rel_tol);
}

// Closed form (prod gamma_i)/(sum gamma_i - k + 1) * x^{sum gamma_i - k + 1} / log x.
inline double leitmann_term_general(double x, const std::vector<gamma_exponent>& gs) {
    if (x <= 2) throw std::domain_error("leitmann_term: x > 2 required");
    ld expo = 1.0L - static_cast<ld>(gs.size());
    ld coeff = 1.0L;
    for (const auto& g : gs) {
        expo += g.value_ld();
        coeff *= g.value_ld();
    }
    if (expo <= 0.0L)
        throw std::domain_error("leitmann_term: sum of gammas - k + 1 must be positive");
    return static_cast<double>(coeff / expo * std::pow(static_cast<ld>(x), expo) /
                               std::log(static_cast<ld>(x)));
}

inline double leitmann_term(double x, const gamma_pair& pair) {
    return leitmann_term_general(x, {pair.g1(), pair.g2()});
}

// ---------------------------------------------------------------------------
// Four-sum decomposition of the intersection count.
//
// With Delta_i(p) = (p+1)^{gamma_i} - p^{gamma_i} and
// Psi_i(p) = psi(-(p+1)^{gamma_i}) - psi(-p^{gamma_i}), the identity
// floor(-t) = -t - 1/2 - psi(-t) turns each membership indicator into
// Delta_i(p) + Psi_i(p), so the exact count splits as
//   count = sum_p Delta_1 Delta_2   (f1)
//         + sum_p Delta_1 Psi_2     (f2)
//         + sum_p Psi_1 Delta_2     (f3)
//         + sum_p Psi_1 Psi_2       (f4).
// The split is algebraically exact; floats limit it to ~1e-6 relative.
// ---------------------------------------------------------------------------

struct f_decomposition_result {
    u64 x = 0;
    double f1 = 0, f2 = 0, f3 = 0, f4 = 0;
    u64 exact_count = 0;
};

// psi(-p^gamma) with a guarded path near integers: psi jumps there, so the
// side is decided exactly in integer arithmetic and the offset is recomputed
// at quad precision.
inline ld psi_neg_pow(u64 p, const gamma_exponent& g) {
    ld t = std::pow(static_cast<ld>(p), g.value_ld());
    ld f = t - std::floor(t);
    if (f >= ps_float_margin && f <= 1.0L - ps_float_margin)
        return frac(-t) - 0.5L;
    u64 k = static_cast<u64>(std::llroundl(t));
    bigint pa = ipow(p, g.num());
    bigint kb = ipow(k, g.den());
    int side = pa > kb ? 1 : (pa < kb ? -1 : 0);   // sign of p^gamma - k
    quadfloat tq = exp(quadfloat(g.num()) / quadfloat(g.den()) * log(quadfloat(p)));
    ld delta = fabs(tq - quadfloat(k)).convert_to<ld>();
    // t = k + delta: frac(-t) = 1 - delta; t = k - delta: frac(-t) = delta.
    return side > 0 ? 0.5L - delta : delta - 0.5L;
}

inline f_decomposition_result f_decomposition(u64 x, const gamma_pair& pair,
                                              const worker_pool& pool = worker_pool(1),
                                              u64 seg_size = default_segment_size) {
    if (x < 2) throw std::domain_error("f_decomposition: x >= 2 required");
    struct partial {
        kbn_sum<ld> f1, f2, f3, f4;
        u64 members = 0;
    };
    const gamma_exponent& g1 = pair.g1();
    const gamma_exponent& g2 = pair.g2();
    auto partials = chunked_map<partial>(pool, 2, x + 1, seg_size, [&](u64 a, u64 b) {
        partial acc;
        auto mask = prime_mask(a, b);
        for (u64 p = a; p < b; ++p) {
            if (!mask[p - a]) continue;
            ld d1 = std::pow(static_cast<ld>(p + 1), g1.value_ld()) -
                    std::pow(static_cast<ld>(p), g1.value_ld());
            ld d2 = std::pow(static_cast<ld>(p + 1), g2.value_ld()) -
                    std::pow(static_cast<ld>(p), g2.value_ld());
            ld s1 = psi_neg_pow(p + 1, g1) - psi_neg_pow(p, g1);
            ld s2 = psi_neg_pow(p + 1, g2) - psi_neg_pow(p, g2);
            acc.f1.add(d1 * d2);
            acc.f2.add(d1 * s2);
            acc.f3.add(s1 * d2);
            acc.f4.add(s1 * s2);
            if (ps_member_fast(p, g1) && ps_member_fast(p, g2)) ++acc.members;
        }
        return acc;
    });
    kbn_sum<ld> f1, f2, f3, f4;
    u64 members = 0;
    for (const auto& q : partials) {   // fixed fold order: ascending segments
        f1.add(q.f1);
        f2.add(q.f2);
        f3.add(q.f3);
        f4.add(q.f4);
        members += q.members;
    }
    f_decomposition_result r;
    r.x = x;
    r.f1 = static_cast<double>(f1.value());
    r.f2 = static_cast<double>(f2.value());
    r.f3 = static_cast<double>(f3.value());
    r.f4 = static_cast<double>(f4.value());
    r.exact_count = members;
    return r;
}

// ---------------------------------------------------------------------------
// Count reports.
// ---------------------------------------------------------------------------

struct count_report {
    u64 x = 0;
    std::vector<gamma_exponent> gammas;
    u64 exact_count = 0;
    double main_term = 0;
    double leitmann_term = 0;   // NaN when the closed form has no positive exponent
    double abs_error = 0;
    double rel_error = 0;
};

inline count_report make_count_report(u64 x, const std::vector<gamma_exponent>& gs,
                                      const worker_pool& pool = worker_pool(1),
                                      u64 seg_size = default_segment_size) {
    count_report r;
    r.x = x;
    r.gammas = gs;
    r.exact_count = pi_intersect(x, gs, pool, seg_size);
    r.main_term = main_term_general(static_cast<double>(x), gs);
    try {
        r.leitmann_term = leitmann_term_general(static_cast<double>(x), gs);
    } catch (const std::domain_error&) {
        r.leitmann_term = std::numeric_limits<double>::quiet_NaN();
    }
    r.abs_error = std::fabs(static_cast<double>(r.exact_count) - r.main_term);
    r.rel_error = r.main_term > 0 ? r.abs_error / r.main_term
                                  : std::numeric_limits<double>::quiet_NaN();
    return r;
}

struct theorem_run {
    std::vector<count_report> rows;
    std::optional<double> fitted_exponent;   // absent when the grid has < 2 points
};

// Least-squares slope of log(abs_error) against log(x).  A zero error (count
// landing exactly on the main term) is floored at one half count so the log
// stays defined.
inline std::optional<double> fit_error_exponent(const std::vector<count_report>& rows) {
    if (rows.size() < 2) return std::nullopt;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& r : rows) {
        double lx = std::log(static_cast<double>(r.x));
        double ly = std::log(std::max(r.abs_error, 0.5));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    double n = static_cast<double>(rows.size());
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

inline theorem_run theorem_report(const gamma_pair& pair, const std::vector<u64>& x_grid,
                                  const worker_pool& pool = worker_pool(1),
                                  u64 seg_size = default_segment_size) {
    if (!pair.theorem_range())
        throw std::invalid_argument(
            "gamma pair outside the asymptotic range 21/11 < gamma1 + gamma2 < 2");
    if (x_grid.empty()) throw std::invalid_argument("empty x grid");
    for (std::size_t i = 0; i < x_grid.size(); ++i) {
        if (x_grid[i] < 100) throw std::invalid_argument("grid points must be >= 100");
        if (i > 0 && x_grid[i] <= x_grid[i - 1])
            throw std::invalid_argument("grid must be strictly ascending");
    }
    theorem_run run;
    for (u64 x : x_grid)
        run.rows.push_back(make_count_report(x, {pair.g1(), pair.g2()}, pool, seg_size));
    run.fitted_exponent = fit_error_exponent(run.rows);
    return run;
}

// ---------------------------------------------------------------------------
// CSV emission.  Fixed column set; gamma2 and fitted_exponent cells are left
// empty when absent.  %.17g keeps every double bit-exact across a parse.
// ---------------------------------------------------------------------------

inline std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline const char* count_csv_header() {
    return "x,gamma1,gamma2,exact_count,main_term,leitmann_term,abs_error,rel_error,fitted_exponent";
}

inline std::string count_csv_row(const count_report& r, std::optional<double> fitted) {
    std::string line = std::to_string(r.x);
    line += ',';
    line += format_g17(r.gammas[0].value());
    line += ',';
    if (r.gammas.size() > 1) line += format_g17(r.gammas[1].value());
    line += ',';
    line += std::to_string(r.exact_count);
    line += ',';
    line += format_g17(r.main_term);
    line += ',';
    if (std::isfinite(r.leitmann_term)) line += format_g17(r.leitmann_term);
    line += ',';
    line += format_g17(r.abs_error);
    line += ',';
    if (std::isfinite(r.rel_error)) line += format_g17(r.rel_error);
    line += ',';
    if (fitted) line += format_g17(*fitted);
    return line;
}

}  // namespace pslab
