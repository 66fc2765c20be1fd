#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "pslab/accum.hpp"
#include "pslab/base.hpp"
#include "pslab/doubledouble.hpp"
#include "pslab/parallel.hpp"
#include "pslab/scalar.hpp"

namespace pslab {

// One summand a * (m + u)^alpha of an exponential-sum phase.
struct phase_term {
    double a;
    double alpha;
    double u = 0.0;
};

// f(m) = sum_j a_j (m + u_j)^{alpha_j}.  Shapes every exponential sum here:
// the direct sums, the derivative-test checkers and the stationary-phase
// transform all consume this form.
class phase_spec {
public:
    explicit phase_spec(std::vector<phase_term> terms) : terms_(std::move(terms)) {
        if (terms_.empty()) throw std::invalid_argument("phase needs at least one term");
        for (const auto& t : terms_) {
            if (t.a == 0.0) throw std::invalid_argument("phase coefficient must be nonzero");
            if (!(t.u >= 0.0 && t.u <= 1.0))
                throw std::invalid_argument("phase shift must lie in [0, 1]");
        }
    }

    const std::vector<phase_term>& terms() const { return terms_; }
    std::size_t k() const { return terms_.size(); }

    ld eval(ld m) const {
        ld s = 0;
        for (const auto& t : terms_)
            s += static_cast<ld>(t.a) * std::pow(m + static_cast<ld>(t.u), static_cast<ld>(t.alpha));
        return s;
    }

    // Value reduced mod 1.  Terms are accumulated in double-double so the
    // fractional part survives even when the raw phase is of order 2^40+.
    ld eval_mod1(ld m) const {
        dd acc{0.0L, 0.0L};
        for (const auto& t : terms_) {
            ld p = std::pow(m + static_cast<ld>(t.u), static_cast<ld>(t.alpha));
            acc = dd_add(acc, two_prod(static_cast<ld>(t.a), p));
        }
        return dd_frac(acc);
    }

    // d^order/dm^order via the falling factorial alpha (alpha-1) ... .
    ld deriv(ld m, int order) const {
        ld s = 0;
        for (const auto& t : terms_) {
            ld c = static_cast<ld>(t.a);
            for (int i = 0; i < order; ++i) c *= static_cast<ld>(t.alpha) - i;
            s += c * std::pow(m + static_cast<ld>(t.u), static_cast<ld>(t.alpha) - order);
        }
        return s;
    }

    // For the k-term power-sum bound: R = sum |a_j| M^{alpha_j}.
    ld coefficient_scale(ld M) const {
        ld r = 0;
        for (const auto& t : terms_)
            r += std::fabs(static_cast<ld>(t.a)) * std::pow(M, static_cast<ld>(t.alpha));
        return r;
    }

    phase_spec negated() const {
        auto ts = terms_;
        for (auto& t : ts) t.a = -t.a;
        return phase_spec(std::move(ts));
    }

private:
    std::vector<phase_term> terms_;
};

inline constexpr u64 exp_sum_chunk = 4096;

// sum_{M < m <= M1} e(f(m)).  Work is cut into fixed 4096-wide chunks whose
// partial sums are folded in ascending order, so the result is bit-identical
// for every worker count.  An empty range sums to zero.
inline std::complex<double> exp_sum(const phase_spec& f, u64 M, u64 M1,
                                    const worker_pool& pool = worker_pool(1)) {
    if (M1 <= M) return {0.0, 0.0};
    if (M1 > 2 * M && M > 0)
        throw std::invalid_argument("exp_sum: range must satisfy M < M1 <= 2M");
    auto partials = chunked_map<kbn_complex_sum<double>>(
        pool, M + 1, M1 + 1, exp_sum_chunk, [&](u64 a, u64 b) {
            kbn_complex_sum<double> acc;
            for (u64 m = a; m < b; ++m)
                acc.add(e_phase(f.eval_mod1(static_cast<ld>(m))).c());
            return acc;
        });
    kbn_complex_sum<double> total;
    for (const auto& p : partials) total.add(p);
    return total.value();
}

}  // namespace pslab
