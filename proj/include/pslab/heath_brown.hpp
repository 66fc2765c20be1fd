#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "pslab/base.hpp"
#include "pslab/integer_root.hpp"
#include "pslab/sieve.hpp"

namespace pslab {

// Heath-Brown identity: for n <= z^k,
//
//   Lambda(n) = sum_{j=1}^{k} (-1)^{j-1} C(k, j)
//                 (mu_z *^j 1 *^{j-1} log)(n),
//
// where mu_z(m) = mu(m) for m <= z and 0 otherwise, * is Dirichlet
// convolution, and *^j means j-fold.  The identity is what splits a von
// Mangoldt-weighted exponential sum into type I and type II pieces; here it
// is evaluated literally and compared against Lambda from the sieve.
//
// The truncation needs z^k >= n_limit: below that threshold the tail of the
// binomial cancellation survives and the identity fails.
struct hb_result {
    std::vector<double> lambda_hb;   // index n, valid for 1 <= n <= n_limit
    double max_residual = 0;
    u64 worst_n = 1;
    u64 z = 0;
    unsigned k = 0;
};

namespace detail {

// out[n] += sum_{d t = n} f[d] g[t]; all arrays are 1-based with size N + 1.
inline std::vector<double> dirichlet(const std::vector<double>& f, const std::vector<double>& g) {
    u64 N = f.size() - 1;
    std::vector<double> out(N + 1, 0.0);
    for (u64 d = 1; d <= N; ++d) {
        if (f[d] == 0) continue;
        for (u64 n = d, t = 1; n <= N; n += d, ++t) out[n] += f[d] * g[t];
    }
    return out;
}

}  // namespace detail

// Default truncation z = ceil((2 n_limit)^{1/k}), comfortably above the
// minimal z = n_limit^{1/k}.
inline u64 hb_default_z(u64 n_limit, unsigned k) {
    double z = std::ceil(std::pow(2.0 * static_cast<double>(n_limit), 1.0 / k));
    u64 zi = static_cast<u64>(z);
    while (ipow(zi, k) < bigint(n_limit)) ++zi;
    return zi;
}

inline hb_result heath_brown_decompose(u64 n_limit, unsigned k, u64 z) {
    if (n_limit < 1) throw std::invalid_argument("heath_brown_decompose: empty range");
    if (k < 1 || k > 4) throw std::invalid_argument("heath_brown_decompose: k must be in 1..4");
    if (z < 2 || ipow(z, k) < bigint(n_limit))
        throw std::invalid_argument("heath_brown_decompose: need z^k >= n_limit (z = " +
                                    std::to_string(z) + ", k = " + std::to_string(k) + ")");

    u64 N = n_limit;
    segment seg;
    if (N >= 2) seg = sieve_range(2, N + 1, N);

    std::vector<double> mu_z(N + 1, 0.0), lg(N + 1, 0.0), one(N + 1, 1.0);
    one[0] = 0;
    mu_z[1] = 1.0;  // mu(1)
    for (u64 m = 2; m <= N; ++m) {
        if (m <= z) mu_z[m] = static_cast<double>(seg.mu[m - 2]);
        lg[m] = std::log(static_cast<double>(m));
    }

    // Q_1 = mu_z * log;  Q_j = Q_{j-1} * mu_z * 1.
    std::vector<double> lambda_hb(N + 1, 0.0);
    std::vector<double> Q = detail::dirichlet(mu_z, lg);
    double binom = static_cast<double>(k);  // C(k, 1)
    double sign = 1.0;
    for (unsigned j = 1; j <= k; ++j) {
        for (u64 n = 1; n <= N; ++n) lambda_hb[n] += sign * binom * Q[n];
        if (j == k) break;
        Q = detail::dirichlet(detail::dirichlet(Q, mu_z), one);
        sign = -sign;
        binom = binom * static_cast<double>(k - j) / static_cast<double>(j + 1);
    }

    hb_result out;
    out.z = z;
    out.k = k;
    out.max_residual = 0;
    out.worst_n = 1;
    for (u64 n = 1; n <= N; ++n) {
        double truth = n == 1 ? 0.0 : seg.lambda[n - 2];
        double r = std::fabs(lambda_hb[n] - truth);
        if (r > out.max_residual) {
            out.max_residual = r;
            out.worst_n = n;
        }
    }
    out.lambda_hb = std::move(lambda_hb);
    return out;
}

inline hb_result heath_brown_decompose(u64 n_limit, unsigned k) {
    return heath_brown_decompose(n_limit, k, hb_default_z(n_limit, k));
}

}  // namespace pslab
