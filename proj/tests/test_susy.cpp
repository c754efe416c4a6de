#include <doctest.h>

#include <cmath>
#include <numbers>

#include "support/cases.hpp"
#include "support/oracles.hpp"
#include "xmscarf/errors.hpp"
#include "xmscarf/oracle.hpp"
#include "xmscarf/susy.hpp"

using namespace xmscarf;

namespace {

std::vector<double> interior(double k, int count) {
    std::vector<double> xs;
    const double half = std::numbers::pi / (2 * k);
    for (int i = 1; i <= count; ++i) xs.push_back(-half + 2 * half * i / (count + 1));
    return xs;
}

} // namespace

TEST_CASE("m = 0 superpotential is the classical one") {
    const double a = 1.5, b = 0.5, k = 1.2;
    const PotentialSpec spec = PotentialSpec::trig(0, a, b, k);
    for (double x : {-1.0, 0.0, 0.7}) {
        const double expected = k * (a - b) / 2 / std::cos(k * x) + k * (a + b + 1) / 2 * std::tan(k * x);
        CHECK(superpotential(spec, x) == doctest::Approx(expected));
    }
    CHECK(superpotential(PotentialSpec::trig(0, 2.0, 2.0, 1.0), 0.0) == 0.0);
}

TEST_CASE("pair data") {
    const SusyPair p = make_susy_pair(PotentialSpec::trig(1, 2.0, 1.0, 1.5));
    CHECK(p.factorization_energy == doctest::Approx(1.5 * 1.5 * 16 / 4));
    CHECK_THROWS_AS(make_susy_pair(PotentialSpec::hyperbolic(0, 1, 1, 1)), InvalidArgument);
    CHECK_THROWS_AS(superpotential(PotentialSpec::shifted(0, 1, 1, 1, 0.1), 0.0), InvalidArgument);
}

TEST_CASE("W is minus the log-derivative of the ground state") {
    for (auto [m, a, b] : std::vector<Case>{{0, 1.5, 0.5}, {1, 1.0, 2.0}, {2, 3.5, 2.0}, {3, 3.3, 0.4}}) {
        const PotentialSpec spec = PotentialSpec::trig(m, a, b, 1.0);
        const double h = 1e-4 * std::numbers::pi;
        for (double x : interior(1.0, 9)) {
            const auto log_psi = [&](double t) { return std::log(std::abs(wavefunction(spec, m, t))); };
            const double fd = -oracle::diff5(log_psi, x, h);
            INFO("m=" << m << " x=" << x);
            CHECK(superpotential(spec, x) == doctest::Approx(fd).epsilon(1e-6).scale(1.0));
        }
    }
}

TEST_CASE("analytic W' matches a finite difference") {
    const PotentialSpec spec = PotentialSpec::trig(3, 3.3, 0.4, 0.9);
    for (double x : interior(0.9, 7)) {
        const double fd = oracle::diff5([&](double t) { return superpotential(spec, t); }, x, 1e-4);
        CHECK(superpotential_derivative(spec, x) == doctest::Approx(fd).epsilon(1e-7));
    }
}

TEST_CASE("partner potentials against the potential module and the printed forms") {
    for (auto [m, a, b] : std::vector<Case>{{0, 2.0, 1.0}, {1, 1.0, 2.0}, {2, 3.5, 2.0}, {4, 4.2, 0.7}}) {
        const PotentialSpec spec = PotentialSpec::trig(m, a, b, 1.1);
        const SusyPair pair = make_susy_pair(spec);
        for (double x : interior(1.1, 50)) {
            const double v = potential_value(spec, x).real();
            const double vm = partner_potential(spec, PartnerSign::Minus, x);
            const double vp = partner_potential(spec, PartnerSign::Plus, x);
            CHECK(vm + pair.factorization_energy == doctest::Approx(v).epsilon(1e-9).scale(1.0));
            CHECK(partner_potential_closed_form(spec, PartnerSign::Minus, x) == doctest::Approx(vm).epsilon(1e-9).scale(1.0));
            CHECK(partner_potential_closed_form(spec, PartnerSign::Plus, x) == doctest::Approx(vp).epsilon(1e-9).scale(1.0));
        }
    }
}

TEST_CASE("m = 0 partner is the classical potential with shifted parameters") {
    const double a = 1.5, b = 0.5, k = 1.0;
    const PotentialSpec spec = PotentialSpec::trig(0, a, b, k);
    const PotentialSpec up = PotentialSpec::trig(0, a + 1, b + 1, k);
    const double shift = k * k * (a + b + 2) - k * k * (a + b + 3) * (a + b + 3) / 4;
    for (double x : interior(k, 11)) {
        const double expected = potential_value(up, x).real() + shift;
        CHECK(partner_potential(spec, PartnerSign::Plus, x) == doctest::Approx(expected).epsilon(1e-10));
    }
}

TEST_CASE("shape invariance") {
    const PotentialSpec spec = PotentialSpec::trig(1, 1.0, 2.0, 1.0);
    CHECK(shape_invariance_remainder(spec) == doctest::Approx(5.0));
    for (double x : interior(1.0, 1000)) CHECK(shape_invariance_defect(spec, x) < 1e-9);

    const PotentialSpec classical = PotentialSpec::trig(0, 0.7, 0.3, 1.0);
    for (double x : interior(1.0, 200)) {
        const double scale = std::max(1.0, std::abs(partner_potential(classical, PartnerSign::Plus, x)));
        CHECK(shape_invariance_defect(classical, x) < 1e-12 * scale);
    }
    for (double x : interior(1.0, 200)) CHECK(shape_invariance_defect(PotentialSpec::trig(3, 5.5, 2.2, 1.0), x) < 1e-8);
}

TEST_CASE("W has no pole for admissible parameters") {
    const PotentialSpec spec = PotentialSpec::trig(2, 2.5, 0.7, 1.0);
    for (double x : interior(1.0, 2000)) CHECK(std::isfinite(superpotential(spec, x)));
}

TEST_CASE("SUSY ladder: V+ spectrum is V- spectrum without its ground level") {
    const PotentialSpec spec = PotentialSpec::trig(1, 1.0, 2.0, 1.0);
    const GridSpec grid = trig_grid(1.0, 4001);
    const auto minus = solve_spectrum([&](double x) { return partner_potential(spec, PartnerSign::Minus, x); }, grid, 5, true);
    const auto plus = solve_spectrum([&](double x) { return partner_potential(spec, PartnerSign::Plus, x); }, grid, 4, true);
    CHECK(std::abs(minus.eigenvalues[0]) < 1e-5);
    for (int i = 0; i < 4; ++i) CHECK(plus.eigenvalues[i] == doctest::Approx(minus.eigenvalues[i + 1]).epsilon(1e-4));
}
