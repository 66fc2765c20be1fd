// Acceptance battery: every release gate in one binary.  Each criterion
// prints exactly one PASS/FAIL line with the measured evidence; the process
// exits nonzero if any line fails.  No tolerances here are adjustable from
// the command line on purpose: these are the frozen contract values.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <cstring>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pslab/pslab.hpp"

using namespace pslab;

namespace {

struct outcome {
    bool pass = false;
    std::string details;
};

std::string str_printf(const char* fmt, ...) __attribute__((format(printf, 1, 2)));
std::string str_printf(const char* fmt, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, fmt);
    std::vsnprintf(buf, sizeof buf, fmt, ap);
    va_end(ap);
    return buf;
}

// 1. The prime-walk and witness-walk counters must agree exactly for random
//    rational exponents.
outcome c1_dual_count_agreement() {
    worker_pool pool(4);
    std::mt19937_64 rng(20260823);
    std::vector<gamma_exponent> gs;
    while (gs.size() < 20) {
        i64 den = 3 + static_cast<i64>(rng() % 998);
        i64 lo = den / 2 + 1, hi = den - 1;
        if (lo > hi) continue;
        i64 num = lo + static_cast<i64>(rng() % static_cast<u64>(hi - lo + 1));
        gs.emplace_back(num, den);
    }
    int agree = 0, total = 0;
    for (const auto& g : gs) {
        ++total;
        if (pi_gamma(100000, g, pool) == pi_gamma_dual(100000, g)) ++agree;
    }
    for (int i = 0; i < 5; ++i) {
        ++total;
        if (pi_gamma(1000000, gs[i], pool) == pi_gamma_dual(1000000, gs[i])) ++agree;
    }
    return {agree == total,
            str_printf("%d/%d counts agree (20 exponents at 1e5, 5 at 1e6)", agree, total)};
}

// 2. Relative error of the intersection count against the analytic main term
//    over x = 1e5, 1e6, 1e7: strictly decreasing, final value <= 0.2, fitted
//    error exponent <= 1.05.
outcome c2_relative_error_decay() {
    worker_pool pool(4);
    gamma_pair pair(gamma_exponent(49, 50), gamma_exponent(97, 100));
    theorem_run run = theorem_report(pair, {100000, 1000000, 10000000}, pool);
    double r1 = run.rows[0].rel_error;
    double r2 = run.rows[1].rel_error;
    double r3 = run.rows[2].rel_error;
    bool decreasing = r1 > r2 && r2 > r3;
    bool tail = r3 <= 0.2;
    double fitted = run.fitted_exponent ? *run.fitted_exponent : 99.0;
    bool slope = fitted <= 1.05;
    return {decreasing && tail && slope,
            str_printf("rel={%.8g, %.8g, %.8g} strictly-decreasing=%s final<=0.2=%s "
                       "fitted=%.5f<=1.05=%s",
                       r1, r2, r3, decreasing ? "yes" : "no", tail ? "yes" : "no", fitted,
                       slope ? "yes" : "no")};
}

// 3. The four-sum split of the intersection count recombines to the exact
//    count within 1e-6 relative.
outcome c3_four_sum_identity() {
    worker_pool pool(4);
    struct sample {
        gamma_pair pair;
        u64 x;
    };
    const sample samples[5] = {
        {gamma_pair(gamma_exponent(9, 10), gamma_exponent(4, 5)), 1000},
        {gamma_pair(gamma_exponent(49, 50), gamma_exponent(97, 100)), 100000},
        {gamma_pair(gamma_exponent(24, 25), gamma_exponent(19, 20)), 10000},
        {gamma_pair(gamma_exponent(99, 100), gamma_exponent(49, 50)), 1000000},
        {gamma_pair(gamma_exponent(17, 18), gamma_exponent(16, 17)), 100000},
    };
    double worst = 0;
    int ok = 0;
    for (const auto& s : samples) {
        auto d = f_decomposition(s.x, s.pair, pool);
        double count = static_cast<double>(d.exact_count);
        double rel = std::fabs(d.f1 + d.f2 + d.f3 + d.f4 - count) / std::max(1.0, count);
        if (rel > worst) worst = rel;
        if (rel <= 1e-6) ++ok;
    }
    return {ok == 5, str_printf("%d/5 splits within 1e-6 relative, worst %.3g", ok, worst)};
}

// 4. Fourth-order combinatorial identity for Lambda reproduces the sieve up
//    to n = 20000 with residual <= 1e-8.
outcome c4_heath_brown_residual() {
    auto r = heath_brown_decompose(20000, 4);
    return {r.max_residual <= 1e-8,
            str_printf("k=4 z=%llu max residual %.3g at n=%llu (tolerance 1e-8)",
                       static_cast<unsigned long long>(r.z), r.max_residual,
                       static_cast<unsigned long long>(r.worst_n))};
}

// 5. Truncated Fourier expansion of the sawtooth: measured remainder within
//    slack 10 of its envelope on a dense grid plus the integer corners.
outcome c5_psi_fourier_bound() {
    const double hs[3] = {16.0, 256.0, 4096.0};
    u64 checked = 0, passed = 0;
    for (double H : hs) {
        for (double theta : {0.0, 1.0, -2.0, 0.5}) {
            ++checked;
            if (psi_fourier_check(theta, H, 10.0).pass) ++passed;
        }
        for (u64 i = 0; i < 10000; ++i) {
            double theta = (static_cast<double>(i) + 0.5) / 10000.0;
            ++checked;
            if (psi_fourier_check(theta, H, 10.0).pass) ++passed;
        }
    }
    return {checked == passed,
            str_printf("%llu/%llu remainder checks hold for H in {16, 256, 4096}",
                       static_cast<unsigned long long>(passed),
                       static_cast<unsigned long long>(checked))};
}

// 6. The explicit-constant mean-square inequality holds for every shift cap
//    Q on 1000 random unimodular sequences.
outcome c6_weyl_vdc_inequality() {
    std::mt19937_64 rng(7);
    u64 sequences = 0, violations = 0;
    for (int t = 0; t < 1000; ++t) {
        u64 N = 16 + rng() % 497;
        std::vector<std::complex<double>> z(N);
        for (auto& v : z) {
            double u = static_cast<double>(rng() >> 11) * 0x1p-53;
            v = e_phase(static_cast<ld>(u)).c();
        }
        ++sequences;
        if (!weyl_vdc_scan(z).all_hold) ++violations;
    }
    return {violations == 0,
            str_printf("%llu sequences scanned over all Q, %llu violations",
                       static_cast<unsigned long long>(sequences),
                       static_cast<unsigned long long>(violations))};
}

// 7. Stationary-phase transformation: residual between the direct sum and
//    the transformed sum stays within 5x its envelope.
outcome c7_b_process_residual() {
    phase_spec unit_w({{1.0, 0.0, 0.0}});
    u64 cases = 0, held = 0;
    const double amps[6] = {40.0, 100.0, 200.0, 400.0, 1000.0, 2000.0};
    const double expos[2] = {0.5, 2.0 / 3.0};
    const std::pair<u64, u64> ranges[2] = {{1000, 2000}, {4000, 8000}};
    for (double T : amps)
        for (double al : expos)
            for (auto [a, b] : ranges) {
                ++cases;
                if (b_process(phase_spec({{T, al, 0.0}}), unit_w, a, b, 5.0).report.pass) ++held;
            }
    const std::vector<phase_spec> two_term = {
        phase_spec({{1000.0, 0.5, 0.0}, {50.0, 1.0 / 3.0, 0.0}}),
        phase_spec({{600.0, 0.5, 0.0}, {20.0, 0.25, 0.0}}),
        phase_spec({{300.0, 2.0 / 3.0, 0.0}, {40.0, 0.5, 0.0}}),
        phase_spec({{-150.0, 0.5, 0.0}, {-10.0, 1.0 / 3.0, 0.0}}),
        phase_spec({{2000.0, 0.5, 0.0}, {100.0, 1.0 / 3.0, 0.0}}),
    };
    for (std::size_t i = 0; i < two_term.size(); ++i) {
        u64 a = i == 3 ? 2000 : (i == 4 ? 4000 : 1000);
        u64 b = 2 * a;
        ++cases;
        if (b_process(two_term[i], unit_w, a, b, 5.0).report.pass) ++held;
    }
    return {cases == held,
            str_printf("%llu/%llu transformations within 5x envelope (24 monomial, 5 two-term)",
                       static_cast<unsigned long long>(held),
                       static_cast<unsigned long long>(cases))};
}

// 8. Coefficient algebra on a 100 x 100 rational grid: fixed signs, positive
//    discriminants, direct and factored discriminants within 1e-12 relative.
outcome c8_coefficient_grid() {
    const i64 side = 100;
    const i64 den1 = 2 * (side + 1);
    u64 cells = 0, good = 0;
    double worst_rel = 0;
    for (i64 i = 0; i < side; ++i) {
        gamma_exponent g1(side + 2 + i, den1);
        for (i64 j = 0; j < side; ++j) {
            i64 num2 = (side + 1) * (side + 1) + (i + 1) * (j + 1);
            gamma_pair pair(g1, gamma_exponent(num2, den1 * (side + 1)));
            auto ca = case4_coefficients(pair);
            bool signs = ca.A < 0 && ca.B < 0 && ca.C < 0 && ca.disc_AC > 0 && ca.A1 > 0 &&
                         ca.C1 > 0 && ca.disc_1 > 0;
            double rel = std::fabs(ca.disc_AC - ca.disc_AC_factored) /
                         std::fabs(ca.disc_AC_factored);
            if (rel > worst_rel) worst_rel = rel;
            ++cells;
            if (signs && rel <= 1e-12) ++good;
        }
    }
    return {cells == good,
            str_printf("%llu/%llu grid cells hold, worst factored-vs-direct %.3g",
                       static_cast<unsigned long long>(good),
                       static_cast<unsigned long long>(cells), worst_rel)};
}

// 9. Closed-form phase partials against Richardson-extrapolated central
//    differences, 1000 random samples, 1e-6 relative.
outcome c9_phase_partials_fd() {
    gamma_pair pairs[2] = {
        gamma_pair(gamma_exponent(49, 50), gamma_exponent(97, 100)),
        gamma_pair(gamma_exponent(9, 10), gamma_exponent(4, 5)),
    };
    std::mt19937_64 rng(0x9e3779b9);
    std::uniform_real_distribution<double> logu(std::log(1e3), std::log(1e5));
    std::uniform_int_distribution<int> qd(1, 8), hd(1, 50), sd(0, 1);

    auto value = [](ld m, ld n, ld q, ld h1, ld h2, const gamma_pair& g) {
        return bilinear_phase_value(m, n, q, h1, h2, g);
    };
    u64 comparisons = 0, ok = 0;
    double worst = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const gamma_pair& g = pairs[trial % 2];
        ld m = std::exp(logu(rng)), n = std::exp(logu(rng));
        ld q = qd(rng);
        ld h1 = hd(rng) * (sd(rng) ? 1 : -1);
        ld h2 = hd(rng) * (sd(rng) ? 1 : -1);
        ld hm = 1e-3L * m, hn = 1e-3L * n;
        auto p = bilinear_phase_partials(m, n, q, h1, h2, g);
        ld V = std::fabs(value(m, n, q, h1, h2, g));

        auto rich = [](ld coarse, ld fine) { return (4 * fine - coarse) / 3; };
        auto d1m = [&](ld s) {
            return (value(m + s, n, q, h1, h2, g) - value(m - s, n, q, h1, h2, g)) / (2 * s);
        };
        auto d1n = [&](ld s) {
            return (value(m, n + s, q, h1, h2, g) - value(m, n - s, q, h1, h2, g)) / (2 * s);
        };
        auto d2m = [&](ld s) {
            return (value(m + s, n, q, h1, h2, g) - 2 * value(m, n, q, h1, h2, g) +
                    value(m - s, n, q, h1, h2, g)) / (s * s);
        };
        auto d2n = [&](ld s) {
            return (value(m, n + s, q, h1, h2, g) - 2 * value(m, n, q, h1, h2, g) +
                    value(m, n - s, q, h1, h2, g)) / (s * s);
        };
        auto dmn = [&](ld sm, ld sn) {
            return (value(m + sm, n + sn, q, h1, h2, g) - value(m + sm, n - sn, q, h1, h2, g) -
                    value(m - sm, n + sn, q, h1, h2, g) + value(m - sm, n - sn, q, h1, h2, g)) /
                   (4 * sm * sn);
        };
        auto d3n = [&](ld s) {
            return (value(m, n + 2 * s, q, h1, h2, g) - 2 * value(m, n + s, q, h1, h2, g) +
                    2 * value(m, n - s, q, h1, h2, g) - value(m, n - 2 * s, q, h1, h2, g)) /
                   (2 * s * s * s);
        };
        auto d2n1m = [&](ld sm, ld sn) {
            auto inner = [&](ld mm) {
                return (value(mm, n + sn, q, h1, h2, g) - 2 * value(mm, n, q, h1, h2, g) +
                        value(mm, n - sn, q, h1, h2, g)) / (sn * sn);
            };
            return (inner(m + sm) - inner(m - sm)) / (2 * sm);
        };

        struct probe {
            double closed;
            ld fd;
            ld floor_scale;
        };
        const probe probes[7] = {
            {p.f_m, rich(d1m(hm), d1m(hm / 2)), 1 / hm},
            {p.f_n, rich(d1n(hn), d1n(hn / 2)), 1 / hn},
            {p.f_mm, rich(d2m(hm), d2m(hm / 2)), 1 / (hm * hm)},
            {p.f_nn, rich(d2n(hn), d2n(hn / 2)), 1 / (hn * hn)},
            {p.f_nm, rich(dmn(hm, hn), dmn(hm / 2, hn / 2)), 1 / (hm * hn)},
            {p.f_nnn, rich(d3n(hn), d3n(hn / 2)), 1 / (hn * hn * hn)},
            {p.f_nnm, rich(d2n1m(hm, hn), d2n1m(hm / 2, hn / 2)), 1 / (hm * hn * hn)},
        };
        for (const auto& pr : probes) {
            ++comparisons;
            ld err = std::fabs(static_cast<ld>(pr.closed) - pr.fd);
            ld tol = 1e-6L * std::fabs(static_cast<ld>(pr.closed)) + 1e-16L * V * pr.floor_scale;
            if (err <= tol) ++ok;
            double rel = pr.closed != 0 ? static_cast<double>(err / std::fabs((ld)pr.closed))
                                        : 0.0;
            if (err > tol && rel > worst) worst = rel;
        }
    }
    return {comparisons == ok,
            str_printf("%llu/%llu derivative comparisons within 1e-6%s",
                       static_cast<unsigned long long>(ok),
                       static_cast<unsigned long long>(comparisons),
                       ok == comparisons ? "" :
                       str_printf(", worst miss %.3g", worst).c_str())};
}

// 10. Every published artifact is byte-identical across worker pool sizes
//     1, 2 and 8.
outcome c10_parallel_determinism() {
    gamma_pair pair(gamma_exponent(49, 50), gamma_exponent(97, 100));
    auto render_theorem = [&](unsigned threads) {
        worker_pool pool(threads);
        theorem_run run = theorem_report(pair, {100000, 1000000}, pool);
        std::string text = std::string(count_csv_header()) + "\n";
        for (std::size_t i = 0; i < run.rows.size(); ++i) {
            bool last = i + 1 == run.rows.size();
            text += count_csv_row(run.rows[i], last ? run.fitted_exponent : std::nullopt) + "\n";
        }
        return text;
    };
    auto render_zhai = [](unsigned threads) {
        worker_pool pool(threads);
        std::vector<lemma_check_report> rs;
        rs.push_back(zhai_sk_check(phase_spec({{0.8, 0.5, 0.0}}), 4096, sk_regime::small_R,
                                   0.05, 10.0, pool));
        rs.push_back(zhai_sk_check(phase_spec({{0.5, 0.5, 0.0}, {0.3, 1.0 / 3.0, 0.0}}), 4096,
                                   sk_regime::small_R, 0.05, 10.0, pool));
        rs.push_back(zhai_sk_check(phase_spec({{2.0, 1.5, 0.0}}), 1024, sk_regime::large_R,
                                   0.05, 10.0, pool));
        return to_json(rs).dump(2);
    };
    auto render_expsum = [](unsigned threads) {
        worker_pool pool(threads);
        auto s = exp_sum(phase_spec({{0.3, 1.5, 0.0}, {7.0, 0.5, 0.0}}), 50000, 100000, pool);
        std::string bits(sizeof s, '\0');
        std::memcpy(bits.data(), &s, sizeof s);
        return bits;
    };

    int identical = 0;
    const int artifacts = 3;
    {
        auto a = render_theorem(1), b = render_theorem(2), c = render_theorem(8);
        if (a == b && a == c) ++identical;
    }
    {
        auto a = render_zhai(1), b = render_zhai(2), c = render_zhai(8);
        if (a == b && a == c) ++identical;
    }
    {
        auto a = render_expsum(1), b = render_expsum(2), c = render_expsum(8);
        if (a == b && a == c) ++identical;
    }
    return {identical == artifacts,
            str_printf("%d/%d artifact kinds byte-identical across pools {1, 2, 8}", identical,
                       artifacts)};
}

}  // namespace

int main() {
    struct criterion {
        const char* name;
        outcome (*run)();
    };
    const criterion criteria[10] = {
        {"dual-count-agreement", c1_dual_count_agreement},
        {"relative-error-decay", c2_relative_error_decay},
        {"four-sum-identity", c3_four_sum_identity},
        {"heath-brown-residual", c4_heath_brown_residual},
        {"psi-fourier-bound", c5_psi_fourier_bound},
        {"weyl-vdc-inequality", c6_weyl_vdc_inequality},
        {"b-process-residual", c7_b_process_residual},
        {"coefficient-grid-signs", c8_coefficient_grid},
        {"phase-partials-fd", c9_phase_partials_fd},
        {"parallel-determinism", c10_parallel_determinism},
    };

    int failures = 0;
    for (int i = 0; i < 10; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        outcome o;
        try {
            o = criteria[i].run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s  %2d  %-24s  %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", i + 1,
                    criteria[i].name, o.details.c_str(), dt);
        std::fflush(stdout);
        if (!o.pass) ++failures;
    }
    std::printf("%d/10 criteria passed\n", 10 - failures);
    return failures > 0 ? 1 : 0;
}
