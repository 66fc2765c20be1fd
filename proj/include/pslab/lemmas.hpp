#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "pslab/accum.hpp"
#include "pslab/base.hpp"
#include "pslab/count.hpp"
#include "pslab/lemma_report.hpp"
#include "pslab/phase.hpp"
#include "pslab/rational.hpp"
#include "pslab/scalar.hpp"

namespace pslab {

// Empirical checkers for the classical exponential-sum bounds.  Each one
// computes the sum directly, evaluates the claimed envelope from true
// derivative extrema (never from asymptotic shorthand), and reports the
// fitted constant measured/envelope.  Bounds carry unspecified absolute
// constants, so "pass" means the fitted constant stays below the configured
// slack.

namespace detail {

// Derivative samples on a uniform grid over [a, b]; 257 points is enough to
// certify sign and monotonicity for the smooth power phases used here.
inline std::vector<ld> deriv_grid(const phase_spec& f, ld a, ld b, int order,
                                  int points = 257) {
    std::vector<ld> vals;
    vals.reserve(points);
    for (int i = 0; i < points; ++i) {
        ld x = a + (b - a) * static_cast<ld>(i) / (points - 1);
        vals.push_back(f.deriv(x, order));
    }
    return vals;
}

inline bool sign_constant(const std::vector<ld>& v) {
    bool pos = false, neg = false;
    for (ld x : v) {
        if (x > 0) pos = true;
        if (x < 0) neg = true;
        if (x == 0) return false;
    }
    return pos != neg;
}

inline bool monotone(const std::vector<ld>& v) {
    bool up = true, down = true;
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i] < v[i - 1]) up = false;
        if (v[i] > v[i - 1]) down = false;
    }
    return up || down;
}

inline ld min_abs(const std::vector<ld>& v) {
    ld m = std::fabs(v[0]);
    for (ld x : v) m = std::min(m, std::fabs(x));
    return m;
}

inline ld max_abs(const std::vector<ld>& v) {
    ld m = 0;
    for (ld x : v) m = std::max(m, std::fabs(x));
    return m;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// First/second derivative tests on (a, b], b <= 2a.
//
// order 1 (Kuzmin-Landau shape): if f' is monotone and stays a distance
// lambda1 > 0 from every integer, then |sum e(f(n))| << 1/lambda1.
// order 2 (van der Corput): if |f''| ~ lambda2 > 0 with constant sign, then
// |sum e(f(n))| << a lambda2^{1/2} + lambda2^{-1/2}.
// ---------------------------------------------------------------------------
inline lemma_check_report vdc_derivative_check(const phase_spec& f, u64 a, u64 b, int order,
                                               double slack = 10.0,
                                               const worker_pool& pool = worker_pool(1)) {
    if (!(5 < a && a < b && b <= 2 * a))
        throw std::invalid_argument("derivative test range must satisfy 5 < a < b <= 2a");
    if (order != 1 && order != 2) throw std::invalid_argument("derivative order must be 1 or 2");

    ld lambda;
    if (order == 1) {
        auto d1 = detail::deriv_grid(f, static_cast<ld>(a), static_cast<ld>(b), 1);
        auto d2 = detail::deriv_grid(f, static_cast<ld>(a), static_cast<ld>(b), 2);
        if (!detail::sign_constant(d2) && detail::max_abs(d2) > 0)
            throw hypothesis_error("first derivative is not monotone (f'' changes sign)");
        if (std::floor(d1.front()) != std::floor(d1.back()))
            throw hypothesis_error("first derivative crosses an integer: lambda1 = 0");
        // f' monotone, so its distance to the nearest integer is minimized at
        // an endpoint.
        lambda = std::min(dist_nearest_int(d1.front()), dist_nearest_int(d1.back()));
        if (lambda <= 0) throw hypothesis_error("first derivative sits on an integer: lambda1 = 0");
    } else {
        auto d2 = detail::deriv_grid(f, static_cast<ld>(a), static_cast<ld>(b), 2);
        if (!detail::sign_constant(d2))
            throw hypothesis_error("second derivative changes sign or vanishes");
        lambda = detail::min_abs(d2);
        if (lambda <= 0) throw hypothesis_error("second derivative vanishes: lambda2 = 0");
    }

    double measured = std::abs(exp_sum(f, a, b, pool));
    double envelope = order == 1
                          ? static_cast<double>(1.0L / lambda)
                          : static_cast<double>(static_cast<ld>(a) * std::sqrt(lambda) +
                                                1.0L / std::sqrt(lambda));
    return make_report("vdc",
                       {{"a", static_cast<double>(a)},
                        {"b", static_cast<double>(b)},
                        {"order", static_cast<double>(order)},
                        {"lambda", static_cast<double>(lambda)}},
                       measured, envelope, slack);
}

// ---------------------------------------------------------------------------
// k-term power-phase bound on (M, 2M] with R = sum |a_j| M^{alpha_j}:
//   R <= eta M  (small_R):   |S_k| << M R^{-1/k}
//   R >= M      (large_R):   |S_k| << R^{1/2} + M R^{-1/(k+1)}
// R == eta M classifies as small_R.
// ---------------------------------------------------------------------------
enum class sk_regime { small_R, large_R };

inline lemma_check_report zhai_sk_check(const phase_spec& f, u64 M, sk_regime regime,
                                        double eta = 0.05, double slack = 10.0,
                                        const worker_pool& pool = worker_pool(1)) {
    for (std::size_t i = 0; i < f.terms().size(); ++i) {
        double al = f.terms()[i].alpha;
        if (al == std::floor(al))
            throw std::invalid_argument("power-phase exponents must be non-integer");
        for (std::size_t j = i + 1; j < f.terms().size(); ++j)
            if (al == f.terms()[j].alpha)
                throw std::invalid_argument("power-phase exponents must be distinct");
    }
    ld R = f.coefficient_scale(static_cast<ld>(M));
    ld Mf = static_cast<ld>(M);
    if (regime == sk_regime::small_R && !(R <= eta * Mf))
        throw std::invalid_argument("small_R regime requires R <= eta M");
    if (regime == sk_regime::large_R && !(R >= Mf))
        throw std::invalid_argument("large_R regime requires R >= M");

    double k = static_cast<double>(f.k());
    double measured = std::abs(exp_sum(f, M, 2 * M, pool));
    double envelope =
        regime == sk_regime::small_R
            ? static_cast<double>(Mf * std::pow(R, -1.0L / k))
            : static_cast<double>(std::sqrt(R) + Mf * std::pow(R, -1.0L / (k + 1)));
    return make_report("zhai-sk",
                       {{"M", static_cast<double>(M)},
                        {"k", k},
                        {"R", static_cast<double>(R)},
                        {"small_regime", regime == sk_regime::small_R ? 1.0 : 0.0}},
                       measured, envelope, slack);
}

// ---------------------------------------------------------------------------
// Shifted-correlation inequality: for any complex z(n), n in (N, 2N], and
// 1 <= Q <= N,
//   |sum z(n)|^2 <= 2 (N/Q) sum_{|q|<Q} (1 - |q|/Q) Re sum_n z(n) conj(z(n+q)).
//
// Derivation of the explicit constant 2: write Q sum_n z(n) as a sum over
// windows of Q consecutive shifts; Cauchy over the <= N+Q-1 window positions
// and an exact expansion of sum_m |window(m)|^2 into shifted correlations
// give factor (N+Q-1)/Q <= 2N/Q.  The right side is (1/Q) sum_m |window|^2
// scaled, hence nonnegative.
// ---------------------------------------------------------------------------
struct weyl_scan_result {
    double lhs = 0;                  // |sum z|^2
    std::vector<double> rhs;         // envelope per Q = 1..N
    bool all_hold = true;
    double worst_ratio = 0;          // max over Q of lhs/rhs
    u64 worst_q = 1;
};

inline weyl_scan_result weyl_vdc_scan(const std::vector<std::complex<double>>& z) {
    u64 N = z.size();
    if (N == 0) throw std::invalid_argument("empty sequence");
    weyl_scan_result out;
    kbn_complex_sum<double> s;
    for (const auto& v : z) s.add(v);
    out.lhs = std::norm(s.value());

    // Correlations C_q = sum_n z(n) conj(z(n+q)), reused by every Q.
    std::vector<double> corr(N, 0.0);
    for (u64 q = 0; q < N; ++q) {
        kbn_sum<double> c;
        for (u64 n = 0; n + q < N; ++n)
            c.add((z[n] * std::conj(z[n + q])).real());
        corr[q] = c.value();
    }
    out.rhs.resize(N + 1);
    double scale = 0;
    for (const auto& v : z) scale += std::norm(v);
    for (u64 Q = 1; Q <= N; ++Q) {
        kbn_sum<double> acc;
        acc.add(corr[0]);
        for (u64 q = 1; q < Q; ++q)
            acc.add(2.0 * (1.0 - static_cast<double>(q) / Q) * corr[q]);
        double rhs = 2.0 * (static_cast<double>(N) / Q) * acc.value();
        out.rhs[Q] = rhs;
        // The inequality is exact; the additive fudge only absorbs the
        // rounding of two compensated sums.
        bool holds = out.lhs <= rhs + 1e-9 * std::max(1.0, scale);
        if (!holds) out.all_hold = false;
        double ratio = rhs > 0 ? out.lhs / rhs : (out.lhs == 0 ? 0 : HUGE_VAL);
        if (ratio > out.worst_ratio) {
            out.worst_ratio = ratio;
            out.worst_q = Q;
        }
    }
    return out;
}

inline lemma_check_report weyl_vdc_check(const std::vector<std::complex<double>>& z, u64 Q) {
    u64 N = z.size();
    if (Q < 1 || Q > N) throw std::invalid_argument("require 1 <= Q <= N");
    auto scan = weyl_vdc_scan(z);
    auto r = make_report("weyl",
                         {{"N", static_cast<double>(N)},
                          {"Q", static_cast<double>(Q)},
                          {"explicit_constant", 2.0}},
                         scan.lhs, scan.rhs[Q], 1.0);
    double scale = 0;
    for (const auto& v : z) scale += std::norm(v);
    r.pass = scan.lhs <= scan.rhs[Q] + 1e-9 * std::max(1.0, scale);
    return r;
}

// ---------------------------------------------------------------------------
// Sawtooth Fourier truncation: for H > 1,
//   psi(theta) = -sum_{0<|h|<=H} e(theta h)/(2 pi i h) + O(min(1, 1/(H ||theta||))).
// Pairing h with -h collapses the series to sum_h sin(2 pi h theta)/(pi h),
// so the measured error is |psi(theta) + sum_{h<=H} sin(2 pi h theta)/(pi h)|.
// Integer theta takes the envelope-1 branch; nothing is ever divided by zero.
// ---------------------------------------------------------------------------
inline lemma_check_report psi_fourier_check(double theta, double H, double slack = 10.0) {
    if (!(H > 1)) throw std::invalid_argument("require H > 1");
    kbn_sum<double> series;
    u64 hmax = static_cast<u64>(H);
    for (u64 h = 1; h <= hmax; ++h) {
        ld fr = frac_of_product(static_cast<i64>(h), static_cast<ld>(theta));
        series.add(std::sin(2.0 * std::numbers::pi * static_cast<double>(fr)) /
                   (std::numbers::pi * static_cast<double>(h)));
    }
    double measured = std::fabs(static_cast<double>(psi(theta)) + series.value());
    double dist = static_cast<double>(dist_nearest_int(theta));
    double envelope = dist == 0.0 ? 1.0 : std::min(1.0, 1.0 / (H * dist));
    return make_report("psi-fourier", {{"theta", theta}, {"H", H}}, measured, envelope, slack);
}

// ---------------------------------------------------------------------------
// Product-of-min sums over (M, 2M]:
//   sum_m prod_j min(1, 1/(H_j ||(m+u_j)^{gamma_j}||))
//     << M (H_1...H_k)^{-1} (log M)^k + M^{k/(k+1)} (log M)^k
// under gamma_1 + ... + gamma_k > k - 1/(k+1).  The condition is recorded,
// not enforced; outside it the envelope simply loses its meaning.
// ---------------------------------------------------------------------------
struct min_sum_result {
    double value = 0;
    lemma_check_report report;
    bool condition_met = true;
};

inline min_sum_result min_sum_zhai(u64 M, const std::vector<double>& H,
                                   const std::vector<double>& gammas,
                                   const std::vector<double>& u, double slack = 10.0) {
    std::size_t k = gammas.size();
    if (k == 0 || H.size() != k || u.size() != k)
        throw std::invalid_argument("H, gamma, u must have equal nonzero length");
    for (double h : H)
        if (!(h > 1)) throw std::invalid_argument("require every H_j > 1");
    double gsum = 0;
    for (double g : gammas) gsum += g;
    bool cond = gsum > static_cast<double>(k) - 1.0 / (static_cast<double>(k) + 1);

    kbn_sum<double> total;
    for (u64 m = M + 1; m <= 2 * M; ++m) {
        double prod = 1.0;
        for (std::size_t j = 0; j < k; ++j) {
            ld t = std::pow(static_cast<ld>(m) + static_cast<ld>(u[j]),
                            static_cast<ld>(gammas[j]));
            double d = static_cast<double>(dist_nearest_int(t));
            prod *= d == 0.0 ? 1.0 : std::min(1.0, 1.0 / (H[j] * d));
        }
        total.add(prod);
    }
    double logk = std::pow(std::log(static_cast<double>(M)), static_cast<double>(k));
    double hprod = 1.0;
    for (double h : H) hprod *= h;
    double envelope = static_cast<double>(M) / hprod * logk +
                      std::pow(static_cast<double>(M),
                               static_cast<double>(k) / (static_cast<double>(k) + 1)) *
                          logk;
    min_sum_result out;
    out.value = total.value();
    out.condition_met = cond;
    std::vector<std::pair<std::string, double>> params = {
        {"M", static_cast<double>(M)},
        {"k", static_cast<double>(k)},
        {"gamma_condition_met", cond ? 1.0 : 0.0}};
    for (std::size_t j = 0; j < k; ++j)
        params.emplace_back("H" + std::to_string(j + 1), H[j]);
    out.report = make_report("min-sum", std::move(params), out.value, envelope, slack);
    return out;
}

// ---------------------------------------------------------------------------
// Capped reciprocal-distance sum over (N, 2N]: if |f| <= Qbound and
// |f'| >= Delta with constant sign, then
//   sum_n min(D, 1/||f(n)||) << (Qbound + 1)(D + 1/Delta) log(2 + 1/Delta).
// ---------------------------------------------------------------------------
inline lemma_check_report kratzel_min_sum_check(const phase_spec& f, u64 N, double D_cap,
                                                double slack = 10.0) {
    if (N < 1 || !(D_cap > 0)) throw std::invalid_argument("require N >= 1 and D > 0");
    auto d1 = detail::deriv_grid(f, static_cast<ld>(N), static_cast<ld>(2 * N), 1);
    if (!detail::sign_constant(d1))
        throw hypothesis_error("first derivative changes sign on the range");
    ld delta = detail::min_abs(d1);
    if (delta <= 0) throw hypothesis_error("first derivative not bounded away from zero");
    ld qbound = 0;
    for (u64 n = N + 1; n <= 2 * N; ++n) qbound = std::max(qbound, std::fabs(f.eval(n)));

    kbn_sum<double> total;
    for (u64 n = N + 1; n <= 2 * N; ++n) {
        double d = static_cast<double>(dist_nearest_int(f.eval(static_cast<ld>(n))));
        total.add(d == 0.0 ? D_cap : std::min(D_cap, 1.0 / d));
    }
    double inv = static_cast<double>(1.0L / delta);
    double envelope = (static_cast<double>(qbound) + 1.0) * (D_cap + inv) * std::log(2.0 + inv);
    return make_report("kratzel",
                       {{"N", static_cast<double>(N)},
                        {"D", D_cap},
                        {"Q_bound", static_cast<double>(qbound)},
                        {"Delta", static_cast<double>(delta)}},
                       static_cast<double>(total.value()), envelope, slack);
}

// ---------------------------------------------------------------------------
// First-order power increment: (n+q)^{gamma-1} - n^{gamma-1} equals
// (gamma-1) q n^{gamma-2} up to a remainder bounded by q^2 n^{gamma-3}.
// Computed via expm1/log1p so nothing cancels catastrophically.
// ---------------------------------------------------------------------------
inline lemma_check_report delta_expansion_check(u64 n, u64 q, double gamma,
                                                double slack = 10.0) {
    if (q < 1 || !(n > 2 * q))
        throw std::domain_error("require q >= 1 and n > 2q");
    ld s = static_cast<ld>(gamma) - 1.0L;
    ld ratio = static_cast<ld>(q) / static_cast<ld>(n);
    ld head = std::pow(static_cast<ld>(n), s);
    ld remainder = head * (std::expm1(s * std::log1p(ratio)) - s * ratio);
    double measured = static_cast<double>(std::fabs(remainder));
    double envelope = static_cast<double>(
        static_cast<ld>(q) * q * std::pow(static_cast<ld>(n), static_cast<ld>(gamma) - 3.0L));
    return make_report("delta",
                       {{"n", static_cast<double>(n)},
                        {"q", static_cast<double>(q)},
                        {"gamma", gamma}},
                       measured, envelope, slack);
}

// ---------------------------------------------------------------------------
// Truncated-series split of the sawtooth difference at consecutive powers:
//   psi(-(n+1)^g) - psi(-n^g) = M_H(n) + O(E_H(n)),
//   M_H(n) = sum_{h<=H} [sin(2 pi h (n+1)^g) - sin(2 pi h n^g)] / (pi h)
//   E_H(n) = min(1, 1/(H ||(n+1)^g||)) + min(1, 1/(H ||n^g||)).
// The h/-h pairing makes M_H real by construction; the complex-sum identity
// is exercised by tests.  An additional single-frequency envelope
// H n^{g-1} log n min(1, 1/(H ||n^g||)) is reported but not asserted.
// ---------------------------------------------------------------------------
struct mh_eh_result {
    double m_h = 0;
    double e_h = 0;
    double esti_envelope = 0;
    lemma_check_report residual_report;
};

inline mh_eh_result mh_eh_split(u64 n, double H, const gamma_exponent& g,
                                double slack = 10.0) {
    if (!(H > 1)) throw std::invalid_argument("require H > 1");
    ld t0 = std::pow(static_cast<ld>(n), g.value_ld());
    ld t1 = std::pow(static_cast<ld>(n + 1), g.value_ld());
    kbn_sum<double> series;
    u64 hmax = static_cast<u64>(H);
    for (u64 h = 1; h <= hmax; ++h) {
        ld f1 = frac_of_product(static_cast<i64>(h), t1);
        ld f0 = frac_of_product(static_cast<i64>(h), t0);
        series.add((std::sin(2.0 * std::numbers::pi * static_cast<double>(f1)) -
                    std::sin(2.0 * std::numbers::pi * static_cast<double>(f0))) /
                   (std::numbers::pi * static_cast<double>(h)));
    }
    mh_eh_result out;
    out.m_h = series.value();
    double d1 = static_cast<double>(dist_nearest_int(t1));
    double d0 = static_cast<double>(dist_nearest_int(t0));
    out.e_h = (d1 == 0.0 ? 1.0 : std::min(1.0, 1.0 / (H * d1))) +
              (d0 == 0.0 ? 1.0 : std::min(1.0, 1.0 / (H * d0)));
    out.esti_envelope = H * static_cast<double>(std::pow(static_cast<ld>(n), g.value_ld() - 1.0L)) *
                        std::log(static_cast<double>(n)) *
                        (d0 == 0.0 ? 1.0 : std::min(1.0, 1.0 / (H * d0)));
    double psidiff = static_cast<double>(psi_neg_pow(n + 1, g) - psi_neg_pow(n, g));
    double residual = std::fabs(psidiff - out.m_h);
    out.residual_report = make_report("mh-eh",
                                      {{"n", static_cast<double>(n)},
                                       {"H", H},
                                       {"gamma", g.value()}},
                                      residual, out.e_h, slack);
    return out;
}

}  // namespace pslab
