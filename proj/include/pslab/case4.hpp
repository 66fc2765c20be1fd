#pragma once

#include <cmath>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "pslab/base.hpp"
#include "pslab/rational.hpp"

namespace pslab {

// Coefficient algebra for the hardest sub-case of the bilinear estimate,
// where the phase carries both frequencies at comparable strength.  With
// c1 = gamma1, c2 = gamma2 the quadratic form in the two monomial weights has
//
//   A = c1^3 (c1-1)^2 (c1-2)
//   B = c1 (c1-1) c2 (c2-1) (3 c1 c2 - c1^2 - c2^2 - c1 - c2)
//   C = c2^3 (c2-1)^2 (c2-2)
//
// with discriminant-type combination
//
//   B^2 - A C = c1^2 (c1-1)^2 c2^2 (c2-1)^2 (c1-c2)^2
//                 (2 c1 + 2 c2 + 1 + c1^2 + c2^2 - 4 c1 c2),
//
// and a companion quadratic A1 y^2 + B1 y + C1 from the second-order terms:
//
//   A1 = c1^3 (c1-1)^2,  B1 = c1 (c1-1) c2 (c2-1) (c1+c2),  C1 = c2^3 (c2-1)^2.
//
// Inside 1/2 < c2 < c1 < 1 the signs are fixed: A, B, C are all negative
// (c - 2 < 0 and 3 c1 c2 - c1^2 - c2^2 < c1 + c2 there) while both
// discriminants are strictly positive, which is what keeps the stationary
// point nondegenerate.
//
// B^2 - AC cancels catastrophically as gamma2 -> gamma1 (the result carries
// the factor (gamma1 - gamma2)^2 while the operands do not), so the algebra
// runs in 113-bit floats; only then do the direct and factored routes agree
// to better than 1e-12 relative across the whole open domain.
struct coefficient_algebra {
    double A = 0, B = 0, C = 0;
    double disc_AC = 0;           // B^2 - A C, direct
    double disc_AC_factored = 0;  // the product form above
    double A1 = 0, B1 = 0, C1 = 0;
    double disc_1 = 0;            // B1^2 - 4 A1 C1
};

inline coefficient_algebra case4_coefficients(const gamma_pair& g) {
    using wide = boost::multiprecision::cpp_bin_float_quad;
    // Exact rational inputs keep the wide evaluation honest to the last bit.
    wide c1 = wide(g.g1().num()) / wide(g.g1().den());
    wide c2 = wide(g.g2().num()) / wide(g.g2().den());
    wide d1 = c1 - 1, d2 = c2 - 1;

    coefficient_algebra out;
    wide A = c1 * c1 * c1 * d1 * d1 * (c1 - 2);
    wide C = c2 * c2 * c2 * d2 * d2 * (c2 - 2);
    wide B = c1 * d1 * c2 * d2 * (3 * c1 * c2 - c1 * c1 - c2 * c2 - c1 - c2);
    out.A = static_cast<double>(A);
    out.B = static_cast<double>(B);
    out.C = static_cast<double>(C);
    out.disc_AC = static_cast<double>(B * B - A * C);

    wide core = 2 * c1 + 2 * c2 + 1 + c1 * c1 + c2 * c2 - 4 * c1 * c2;
    wide prod = c1 * d1 * c2 * d2 * (c1 - c2);
    out.disc_AC_factored = static_cast<double>(prod * prod * core);

    wide A1 = c1 * c1 * c1 * d1 * d1;
    wide C1 = c2 * c2 * c2 * d2 * d2;
    wide B1 = c1 * d1 * c2 * d2 * (c1 + c2);
    out.A1 = static_cast<double>(A1);
    out.B1 = static_cast<double>(B1);
    out.C1 = static_cast<double>(C1);
    out.disc_1 = static_cast<double>(B1 * B1 - 4 * A1 * C1);
    return out;
}

// Difference power Delta(n, q; s) = (n+q)^s - n^s, computed as
// n^s expm1(s log1p(q/n)) so nearby powers never cancel in floating point.
inline ld delta_pow(ld n, ld q, ld s) {
    if (q == 0) return 0;
    return std::pow(n, s) * std::expm1(s * std::log1p(q / n));
}

// Partial derivatives of the differenced bilinear phase
//
//   f(m, n) = h1 m^{gamma1} Delta(n, q; gamma1) + h2 m^{gamma2} Delta(n, q; gamma2)
//
// in closed form.  Each derivative in n lowers the exponent inside Delta;
// each derivative in m brings down the outer exponent.
struct phase_partials {
    double f_m = 0, f_n = 0;
    double f_mm = 0, f_nm = 0, f_nn = 0;
    double f_nnn = 0, f_nnm = 0;
};

inline phase_partials bilinear_phase_partials(ld m, ld n, ld q, ld h1, ld h2,
                                              const gamma_pair& g) {
    if (!(m > 0) || !(n > 0) || q < 0)
        throw std::invalid_argument("bilinear_phase_partials: need m, n > 0 and q >= 0");
    const ld cs[2] = {g.g1().value_ld(), g.g2().value_ld()};
    const ld hs[2] = {h1, h2};

    phase_partials out;
    ld f_m = 0, f_n = 0, f_mm = 0, f_nm = 0, f_nn = 0, f_nnn = 0, f_nnm = 0;
    for (int i = 0; i < 2; ++i) {
        ld c = cs[i], h = hs[i];
        ld mp = std::pow(m, c), mp1 = std::pow(m, c - 1), mp2 = std::pow(m, c - 2);
        ld D0 = delta_pow(n, q, c);
        ld D1 = delta_pow(n, q, c - 1);
        ld D2 = delta_pow(n, q, c - 2);
        ld D3 = delta_pow(n, q, c - 3);
        f_m += h * c * mp1 * D0;
        f_n += h * c * mp * D1;
        f_mm += h * c * (c - 1) * mp2 * D0;
        f_nm += h * c * c * mp1 * D1;
        f_nn += h * c * (c - 1) * mp * D2;
        f_nnn += h * c * (c - 1) * (c - 2) * mp * D3;
        f_nnm += h * c * c * (c - 1) * mp1 * D2;
    }
    out.f_m = static_cast<double>(f_m);
    out.f_n = static_cast<double>(f_n);
    out.f_mm = static_cast<double>(f_mm);
    out.f_nm = static_cast<double>(f_nm);
    out.f_nn = static_cast<double>(f_nn);
    out.f_nnn = static_cast<double>(f_nnn);
    out.f_nnm = static_cast<double>(f_nnm);
    return out;
}

// Full differenced phase value, for finite-difference cross-checks.
inline ld bilinear_phase_value(ld m, ld n, ld q, ld h1, ld h2, const gamma_pair& g) {
    return h1 * std::pow(m, g.g1().value_ld()) * delta_pow(n, q, g.g1().value_ld()) +
           h2 * std::pow(m, g.g2().value_ld()) * delta_pow(n, q, g.g2().value_ld());
}

}  // namespace pslab
