#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <cstring>
#include <random>
#include <vector>

#include "pslab/pslab.hpp"

using namespace pslab;
using Catch::Approx;

namespace {

bool same_bits(std::complex<double> a, std::complex<double> b) {
    return std::memcmp(&a, &b, sizeof a) == 0;
}

}  // namespace

TEST_CASE("integer phases calibrate the sum exactly") {
    // e(f(m)) = 1 for every integer m, so the sum is just the term count
    phase_spec f({{1.0, 1.0, 0.0}});
    auto s = exp_sum(f, 0, 50);
    CHECK(s.real() == 50.0);
    CHECK(s.imag() == 0.0);

    phase_spec g({{3.0, 2.0, 0.0}});   // 3 m^2 is an integer phase too
    auto t = exp_sum(g, 20, 40);
    CHECK(t.real() == 20.0);
    CHECK(t.imag() == 0.0);
}

TEST_CASE("trivial bound and range rules") {
    phase_spec f({{0.37, 0.5, 0.0}, {1.1, 0.75, 0.25}});
    CHECK(std::abs(exp_sum(f, 100, 200)) <= 100.0 + 1e-9);
    CHECK(exp_sum(f, 100, 100) == std::complex<double>(0, 0));
    CHECK(exp_sum(f, 100, 90) == std::complex<double>(0, 0));
    CHECK_THROWS_AS(exp_sum(f, 100, 201), std::invalid_argument);
    CHECK_NOTHROW(exp_sum(f, 0, 1000));   // M = 0 ranges are unrestricted
}

TEST_CASE("direct sums match a naive evaluation") {
    phase_spec f({{0.198, 0.8, 0.0}, {-2.5, 0.4, 0.5}});
    auto lib = exp_sum(f, 100, 150);
    std::complex<double> naive(0, 0);
    for (u64 m = 101; m <= 150; ++m)
        naive += e_phase(frac(f.eval(static_cast<ld>(m)))).c();
    CHECK(std::abs(lib - naive) < 1e-12);
}

TEST_CASE("worker count never changes a bit of the sum") {
    phase_spec f({{0.61803398874989485, 1.5, 0.0}});
    worker_pool p1(1), p2(2), p8(8);
    auto s1 = exp_sum(f, 0, 20000, p1);
    auto s2 = exp_sum(f, 0, 20000, p2);
    auto s8 = exp_sum(f, 0, 20000, p8);
    CHECK(same_bits(s1, s2));
    CHECK(same_bits(s1, s8));
}

TEST_CASE("coefficient sequences are deterministic and correctly shaped") {
    auto unit = make_coefficients(coeff_kind::unit, 16, 1);
    REQUIRE(unit.size() == 16);
    for (auto& c : unit) CHECK(c == std::complex<double>(1, 0));

    auto mu = make_coefficients(coeff_kind::mu_signs, 100, 1);
    segment s = sieve_range(101, 201, 100);
    REQUIRE(mu.size() == 100);
    for (u64 i = 0; i < 100; ++i) {
        CHECK(mu[i].imag() == 0.0);
        CHECK(mu[i].real() == static_cast<double>(s.mu[i]));
    }

    auto r1 = make_coefficients(coeff_kind::random_unimodular, 64, 7);
    auto r2 = make_coefficients(coeff_kind::random_unimodular, 64, 7);
    auto r3 = make_coefficients(coeff_kind::random_unimodular, 64, 8);
    REQUIRE(r1.size() == 64);
    bool all_same = true;
    for (u64 i = 0; i < 64; ++i) {
        CHECK(std::abs(std::abs(r1[i]) - 1.0) < 1e-12);
        CHECK(same_bits(r1[i], r2[i]));
        if (!same_bits(r1[i], r3[i])) all_same = false;
    }
    CHECK_FALSE(all_same);   // the seed actually matters
}

TEST_CASE("bilinear spec validation and window arithmetic") {
    gamma_pair low(gamma_exponent(13, 25), gamma_exponent(51, 100));
    CHECK_THROWS_AS(bilinear_spec(0, 16, 1, 1, low), std::invalid_argument);
    CHECK_THROWS_AS(bilinear_spec(16, 0, 1, 1, low), std::invalid_argument);
    CHECK_THROWS_AS(bilinear_spec(16, 16, 0, 0, low), std::invalid_argument);

    bilinear_spec spec(4096, 64, 1, 1, low);
    CHECK(spec.X() == Approx(262144.0));
    double R = spec.frequency_scale();
    CHECK(R == Approx(std::pow(262144.0, 0.52) + std::pow(262144.0, 0.51)).epsilon(1e-12));

    // recompute the window edges by hand for several (N, eps)
    for (double eps : {0.005, 0.01, 0.02}) {
        for (u64 N : {u64(4), u64(16), u64(64), u64(256)}) {
            bilinear_spec s2(4096, N, 1, 1, low);
            double X = s2.X();
            double lo = std::pow(X, 2.0 / 11.0 + 8.0 * eps);
            double hi = std::pow(X, 16.0 / 11.0 - 24.0 * eps) / s2.frequency_scale();
            bool want = lo <= static_cast<double>(N) && static_cast<double>(N) <= hi;
            CHECK(s2.inner_range_in_window(eps) == want);
        }
    }

    // low exponents at this scale admit a nonempty window...
    CHECK(bilinear_spec(4096, 64, 1, 1, low).inner_range_in_window(0.01));
    CHECK_FALSE(bilinear_spec(4096, 4, 1, 1, low).inner_range_in_window(0.01));
    // ...while exponents near 1 push the upper edge below the lower one
    gamma_pair thm(gamma_exponent(49, 50), gamma_exponent(97, 100));
    for (u64 N : {u64(4), u64(64), u64(1024)})
        CHECK_FALSE(bilinear_spec(4096, N, 1, 1, thm).inner_range_in_window(0.01));
}

TEST_CASE("bilinear sums respect the trivial bound and stay deterministic") {
    gamma_pair pair(gamma_exponent(9, 10), gamma_exponent(4, 5));
    bilinear_spec spec(128, 32, 1, -2, pair);
    spec.a_kind = coeff_kind::mu_signs;
    spec.b_kind = coeff_kind::random_unimodular;
    spec.seed = 11;

    worker_pool p1(1), p2(2), p8(8);
    auto s1 = type_II_sum(spec, p1);
    auto s2 = type_II_sum(spec, p2);
    auto s8 = type_II_sum(spec, p8);
    CHECK(same_bits(s1, s2));
    CHECK(same_bits(s1, s8));
    CHECK(std::abs(s1) <= 128.0 * 32.0 + 1e-6);

    // type I is type II with unit inner coefficients
    bilinear_spec uspec = spec;
    uspec.b_kind = coeff_kind::unit;
    auto t1 = type_I_sum(spec, p1);
    auto t2 = type_II_sum(uspec, p1);
    CHECK(same_bits(t1, t2));
}

TEST_CASE("prime-weighted sum is below the Chebyshev mass") {
    gamma_pair pair(gamma_exponent(49, 50), gamma_exponent(97, 100));
    worker_pool p1(1), p4(4);
    auto s = prime_exp_sum(10000, 20000, 1, -1, pair, p1);
    ld mass = 0;
    for (auto [n, w] : mangoldt_range(10001, 20001)) {
        (void)n;
        mass += static_cast<ld>(w);
    }
    CHECK(std::abs(s) <= static_cast<double>(mass) + 1e-6);

    auto s4 = prime_exp_sum(10000, 20000, 1, -1, pair, p4);
    CHECK(same_bits(s, s4));

    CHECK_THROWS_AS(prime_exp_sum(10000, 10000, 1, 1, pair, p1), std::invalid_argument);
    CHECK_THROWS_AS(prime_exp_sum(10000, 20001, 1, 1, pair, p1), std::invalid_argument);
    CHECK_THROWS_AS(prime_exp_sum(10000, 20000, 0, 1, pair, p1), std::invalid_argument);
    CHECK_THROWS_AS(prime_exp_sum(10000, 20000, 1, 0, pair, p1), std::invalid_argument);
}

TEST_CASE("two-frequency phase reduction matches a direct small evaluation") {
    gamma_pair pair(gamma_exponent(9, 10), gamma_exponent(4, 5));
    for (u64 t : {100ULL, 999ULL, 12345ULL}) {
        ld direct = frac(3.0L * std::pow(static_cast<ld>(t), 0.9L) -
                         2.0L * std::pow(static_cast<ld>(t), 0.8L));
        ld reduced = detail::two_power_phase_mod1(static_cast<ld>(t), 3, -2, pair);
        double diff = std::fabs(static_cast<double>(direct - reduced));
        diff = std::min(diff, 1.0 - diff);
        CHECK(diff < 1e-12);
    }
}
