#include <doctest.h>

#include <cmath>
#include <numbers>

#include "support/oracles.hpp"
#include "support/cases.hpp"
#include "xmscarf/errors.hpp"
#include "xmscarf/oracle.hpp"

using namespace xmscarf;

TEST_CASE("grids") {
    const GridSpec g = trig_grid(2.0, 101);
    CHECK(g.x_max == doctest::Approx(std::numbers::pi / 4 * (1 - kTrigMargin)));
    CHECK(g.x_min == -g.x_max);
    CHECK(g.at(100) == doctest::Approx(g.x_max));
    CHECK(symmetric_grid(3.0, 7).spacing() == doctest::Approx(1.0));
}

TEST_CASE("infinite square well") {
    const SpectrumResult r = solve_spectrum([](double) { return 0.0; }, GridSpec{0.0, std::numbers::pi, 2001}, 4, true);
    for (int j = 0; j < 4; ++j) CHECK(r.eigenvalues[j] == doctest::Approx((j + 1.0) * (j + 1.0)).epsilon(1e-7));
    REQUIRE(r.richardson_grid.has_value());
    CHECK(r.richardson_grid->n_points == 4001);
    CHECK(r.coarse.size() == 4);
}

TEST_CASE("classical Scarf spectrum") {
    const SpectrumResult r = solve_spectrum(PotentialSpec::trig(0, 2.0, 2.0, 1.0), trig_grid(1.0, 4001), 4, true);
    const double expected[] = {6.25, 12.25, 20.25, 30.25};
    for (int j = 0; j < 4; ++j) CHECK(r.eigenvalues[j] == doctest::Approx(expected[j]).epsilon(1e-3));
}

TEST_CASE("three-point discretization converges at second order") {
    const PotentialSpec spec = PotentialSpec::trig(1, 3.5, 2.0, 1.0);
    std::vector<double> hs, errs;
    for (int n : {251, 501, 1001, 2001}) {
        const GridSpec g = trig_grid(1.0, n);
        const auto r = solve_spectrum(spec, g, 1, false);
        hs.push_back(g.spacing());
        errs.push_back(std::abs(r.eigenvalues[0] - energy(spec, 1)));
    }
    CHECK(oracle::loglog_slope(hs, errs) == doctest::Approx(2.0).epsilon(0.1));
}

TEST_CASE("isospectral extensions") {
    const GridSpec g = trig_grid(1.0, 2001);
    const auto s1 = solve_spectrum(PotentialSpec::trig(1, 5.5, 2.2, 1.0), g, 4, true);
    const auto s2 = solve_spectrum(PotentialSpec::trig(2, 5.5, 2.2, 1.0), g, 4, true);
    const auto s3 = solve_spectrum(PotentialSpec::trig(3, 5.5, 2.2, 1.0), g, 4, true);
    for (int i = 0; i < 4; ++i) {
        CHECK(s2.eigenvalues[i] == doctest::Approx(s1.eigenvalues[i]).epsilon(2e-3));
        CHECK(s3.eigenvalues[i] == doctest::Approx(s1.eigenvalues[i]).epsilon(2e-3));
    }
}

TEST_CASE("hamiltonian residual on the real trigonometric family") {
    for (auto [m, a, b] : std::vector<Case>{{0, 1.0, 0.5}, {1, 2.0, 1.0}, {2, 3.5, 2.0}, {3, 3.3, 0.4}}) {
        const PotentialSpec spec = PotentialSpec::trig(m, a, b, 1.0);
        for (int n = m; n <= m + 4; ++n) {
            INFO("m=" << m << " n=" << n);
            CHECK(hamiltonian_residual(spec, n, trig_grid(1.0, 8001, kResidualMargin)) < 1e-6);
        }
    }
}

TEST_CASE("Rayleigh quotient singles out the right level") {
    const PotentialSpec spec = PotentialSpec::trig(1, 2.0, 1.0, 1.0);
    const EigenpairCheck c = check_eigenpair(spec, 3, trig_grid(1.0, 4001));
    CHECK(std::abs(c.rayleigh.real() - energy(spec, 3)) < 1e-5);
    CHECK(std::abs(c.rayleigh.real() - energy(spec, 4)) > 1.0);
}

TEST_CASE("shifted family: real Rayleigh quotients") {
    const PotentialSpec spec = PotentialSpec::shifted(1, 2.0, 1.0, 1.0, 0.3);
    for (int n = 1; n <= 4; ++n) {
        const EigenpairCheck c = check_eigenpair(spec, n, trig_grid(1.0, 8001));
        CHECK(c.residual < 1e-6);
        CHECK(std::abs(c.rayleigh.imag()) < 1e-8);
        CHECK(c.rayleigh.real() == doctest::Approx(energy(spec, n)).epsilon(1e-6));
    }
    CHECK_THROWS_AS(solve_spectrum(spec, trig_grid(1.0, 1001), 2, false), InvalidArgument);
}

TEST_CASE("hyperbolic bound states decay and satisfy the equation") {
    const PotentialSpec spec = PotentialSpec::hyperbolic(2, -3.5, -4.5, 1.0);
    for (int n = 2; n <= 5; ++n) {
        const double L = hyperbolic_truncation(spec, n);
        const int points = std::max(8001, 2 * static_cast<int>(std::ceil(L / 0.004)) + 1);
        const EigenpairCheck c = check_eigenpair(spec, n, symmetric_grid(L, points));
        CHECK(c.edge_ratio < 1e-8);
        CHECK(c.residual < 1e-6);
    }
    CHECK_THROWS_AS(hyperbolic_truncation(spec, 6), NoSuchBoundState);
}

TEST_CASE("real hyperbolic instance can be diagonalized") {
    const PotentialSpec spec = PotentialSpec::hyperbolic(0, -3.0, -3.0, 1.0);
    const double L = hyperbolic_truncation(spec, 1);
    const auto r = solve_spectrum(spec, symmetric_grid(L, 4001), 2, true);
    CHECK(r.eigenvalues[0] == doctest::Approx(energy(spec, 0)).epsilon(1e-4));
    CHECK(r.eigenvalues[1] == doctest::Approx(energy(spec, 1)).epsilon(1e-3));
    CHECK_THROWS_AS(solve_spectrum(PotentialSpec::hyperbolic(0, -3.0, -2.0, 1.0), symmetric_grid(L, 401), 1, false),
                    InvalidArgument);
}

TEST_CASE("spectrum reports") {
    const VerificationReport good = spectrum_match_report(PotentialSpec::trig(0, 3.5, 2.0, 1.0), 4, 1e-4);
    CHECK(good.passed());
    CHECK(good.records.size() == 4);
    std::vector<double> exact, wrong;
    for (int n = 0; n < 4; ++n) {
        exact.push_back(energy(PotentialSpec::trig(0, 3.5, 2.0, 1.0), n));
        wrong.push_back(exact.back() + 1.0);
    }
    CHECK_FALSE(compare_spectrum(exact, wrong, 1e-3).passed());
    CHECK_FALSE(compare_spectrum(exact, {1.0}, 1e-3).passed());
    CHECK_FALSE(VerificationReport{}.passed());
}
