#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <vector>

#include "pslab/pslab.hpp"

using namespace pslab;
using Catch::Approx;

namespace {

const phase_spec unit_weight({{1.0, 0.0, 0.0}});

}  // namespace

TEST_CASE("an empty dual range leaves only the endpoint terms") {
    // f' = 20/sqrt(m) covers [0.447, 0.632] on (1000, 2000]: no integer v
    phase_spec f({{40.0, 0.5, 0.0}});
    auto r = b_process(f, unit_weight, 1000, 2000);
    CHECK(r.term_count == 0);
    CHECK(r.transformed == std::complex<double>(0, 0));
    CHECK(r.residual == Approx(std::abs(r.direct)).margin(1e-12));
    CHECK(r.residual <= 5.0 * r.envelope);
    CHECK(r.report.pass);
}

TEST_CASE("dual term count equals the lattice points between the slopes") {
    struct probe { double T; u64 want; };
    // f' = T/(2 sqrt m) spans [T/(2 sqrt 2000), T/(2 sqrt 1000)]
    for (auto [T, want] : {probe{200.0, 1}, probe{400.0, 2}, probe{1000.0, 4}}) {
        phase_spec f({{T, 0.5, 0.0}});
        auto r = b_process(f, unit_weight, 1000, 2000);
        CAPTURE(T);
        CHECK(r.term_count == want);
        CHECK(r.term_count ==
              static_cast<u64>(std::floor(r.beta) - std::ceil(r.alpha)) + 1);
        CHECK(r.alpha < r.beta);
    }
}

TEST_CASE("transformed sums track the direct sums inside the envelope") {
    for (double T : {200.0, 400.0, 1000.0}) {
        phase_spec f({{T, 0.5, 0.0}});
        auto r = b_process(f, unit_weight, 1000, 2000);
        CAPTURE(T);
        CHECK(r.residual <= 5.0 * r.envelope);
        CHECK(r.report.pass);
    }
    for (double T : {100.0, 200.0}) {
        phase_spec f({{T, 2.0 / 3.0, 0.0}});
        auto r = b_process(f, unit_weight, 1000, 2000);
        CAPTURE(T);
        CHECK(r.residual <= 5.0 * r.envelope);
    }
}

TEST_CASE("negating the phase conjugates both sums") {
    phase_spec f({{0.1, 1.5, 0.0}});   // f'' > 0: the convex orientation
    auto plus = b_process(f, unit_weight, 1000, 2000);
    auto minus = b_process(f.negated(), unit_weight, 1000, 2000);
    CHECK(minus.direct.real() == Approx(plus.direct.real()).margin(1e-10));
    CHECK(minus.direct.imag() == Approx(-plus.direct.imag()).margin(1e-10));
    CHECK(minus.transformed.real() == Approx(plus.transformed.real()).margin(1e-10));
    CHECK(minus.transformed.imag() == Approx(-plus.transformed.imag()).margin(1e-10));
    CHECK(minus.residual == Approx(plus.residual).margin(1e-10));
    CHECK(minus.envelope == Approx(plus.envelope).epsilon(1e-12));
    CHECK(minus.term_count == plus.term_count);
}

TEST_CASE("two-term phases with aligned coefficients transform cleanly") {
    phase_spec f({{1000.0, 0.5, 0.0}, {50.0, 1.0 / 3.0, 0.0}});
    auto r = b_process(f, unit_weight, 1000, 2000);
    CHECK(r.term_count >= 4);
    CHECK(r.residual <= 5.0 * r.envelope);
    CHECK(r.report.pass);

    phase_spec g({{600.0, 0.5, 0.0}, {20.0, 0.25, 0.0}});
    auto s = b_process(g, unit_weight, 1000, 2000);
    CHECK(s.residual <= 5.0 * s.envelope);
}

TEST_CASE("a dual point landing on the range edge gets half weight") {
    // f = m^2/4096 has f' = m/2048: exactly 0.5 and 1.0 at the endpoints, so
    // v = 1 sits on the edge of [alpha, beta] and enters with weight 1/2
    phase_spec f({{1.0 / 4096.0, 2.0, 0.0}});
    auto r = b_process(f, unit_weight, 1024, 2048);
    CHECK(r.alpha == Approx(0.5).margin(1e-15));
    CHECK(r.beta == Approx(1.0).margin(1e-15));
    CHECK(r.term_count == 1);
    CHECK(std::abs(r.transformed) > 0.0);
    // the half weight shows up as |transformed| = 0.5 sqrt(2048) |g e(...)|
    CHECK(std::abs(r.transformed) == Approx(0.5 * std::sqrt(2048.0)).epsilon(1e-9));
    CHECK(r.residual <= 5.0 * r.envelope);
}

TEST_CASE("weights scale the transform linearly") {
    phase_spec f({{300.0, 0.5, 0.0}});
    phase_spec two({{2.0, 0.0, 0.0}});
    auto u = b_process(f, unit_weight, 1000, 2000);
    auto w = b_process(f, two, 1000, 2000);
    CHECK(w.direct.real() == Approx(2.0 * u.direct.real()).margin(1e-9));
    CHECK(w.direct.imag() == Approx(2.0 * u.direct.imag()).margin(1e-9));
    CHECK(w.transformed.real() == Approx(2.0 * u.transformed.real()).margin(1e-9));
    CHECK(w.transformed.imag() == Approx(2.0 * u.transformed.imag()).margin(1e-9));
    CHECK(w.envelope == Approx(2.0 * u.envelope).epsilon(1e-12));
}

TEST_CASE("sign-changing curvature is rejected") {
    phase_spec f({{1.0, 3.0, 0.0}, {-450.0, 2.0, 0.0}});
    CHECK_THROWS_AS(b_process(f, unit_weight, 100, 200), hypothesis_error);
}

TEST_CASE("range validation") {
    phase_spec f({{40.0, 0.5, 0.0}});
    CHECK_THROWS_AS(b_process(f, unit_weight, 2000, 1000), std::invalid_argument);
    CHECK_THROWS_AS(b_process(f, unit_weight, 1000, 1000), std::invalid_argument);
}

TEST_CASE("report carries the dual geometry") {
    phase_spec f({{400.0, 0.5, 0.0}});
    auto r = b_process(f, unit_weight, 1000, 2000);
    CHECK(r.report.lemma_id == "bprocess");
    bool has_terms = false, has_d = false;
    for (const auto& [k, v] : r.report.params) {
        if (k == "terms") {
            has_terms = true;
            CHECK(v == static_cast<double>(r.term_count));
        }
        if (k == "D") has_d = true;
    }
    CHECK(has_terms);
    CHECK(has_d);
    CHECK(r.report.measured == Approx(r.residual).margin(0));
    CHECK(r.report.envelope == Approx(r.envelope).margin(0));
}
