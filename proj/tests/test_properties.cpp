// Randomized invariants over the parameter space, fixed seeds.
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "xmscarf/eop.hpp"
#include "xmscarf/errors.hpp"
#include "xmscarf/susy.hpp"

using namespace xmscarf;

namespace {

struct Draw {
    int m;
    double a;
    double b;
};

/// Rejection-sample an admissible triple with a, b > -1 and a regular
/// second SUSY denominator.
Draw admissible_draw(std::mt19937_64& rng, int m) {
    std::uniform_real_distribution<double> ua(-0.95, 7.0), ub(-0.95, 4.0);
    for (;;) {
        const double a = ua(rng), b = ub(rng);
        if (admissible(a, b, m) && !denominator_changes_sign(a, b, m, 2000)) return {m, a, b};
    }
}

} // namespace

TEST_CASE("property: exceptional ODE holds for random admissible triples") {
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> ux(-0.98, 0.98);
    for (int trial = 0; trial < 60; ++trial) {
        const Draw d = admissible_draw(rng, 1 + trial % 5);
        const EopIndex idx{d.a, d.b, d.m, d.m + trial % 6};
        double ymax = 0.0;
        for (int i = 0; i <= 200; ++i) ymax = std::max(ymax, std::abs(eop_eval(idx, -1.0 + i / 100.0)));
        const double x = ux(rng);
        INFO("m=" << d.m << " a=" << d.a << " b=" << d.b << " n=" << idx.n << " x=" << x);
        CHECK(eop_ode_residual(idx, x) < 1e-8 * ymax);
    }
}

TEST_CASE("property: weight is positive for admissible triples") {
    std::mt19937_64 rng(202);
    std::uniform_real_distribution<double> ux(-0.999, 0.999);
    for (int trial = 0; trial < 200; ++trial) {
        const Draw d = admissible_draw(rng, 1 + trial % 4);
        CHECK(eop_weight(d.a, d.b, d.m, ux(rng)) > 0.0);
    }
}

TEST_CASE("property: orthogonality for random admissible triples") {
    std::mt19937_64 rng(303);
    for (int trial = 0; trial < 6; ++trial) {
        const Draw d = admissible_draw(rng, 1 + trial % 3);
        const EopIndex p{d.a, d.b, d.m, d.m + 1}, q{d.a, d.b, d.m, d.m + 3};
        const double np = eop_norm_sq(p), nq = eop_norm_sq(q);
        INFO("m=" << d.m << " a=" << d.a << " b=" << d.b);
        CHECK(eop_inner_product(p, p, 200) == doctest::Approx(np).epsilon(1e-8));
        CHECK(std::abs(eop_inner_product(p, q, 200)) < 1e-8 * std::sqrt(np * nq));
    }
}

TEST_CASE("property: shape invariance away from the second denominator's zeros") {
    std::mt19937_64 rng(404);
    std::uniform_real_distribution<double> ux(-1.5, 1.5);
    int checked = 0;
    for (int trial = 0; trial < 80; ++trial) {
        const Draw d = admissible_draw(rng, trial % 4);
        const PotentialSpec spec = PotentialSpec::trig(d.m, d.a, d.b, 1.0);
        const double x = ux(rng);
        try {
            const double scale = std::max(1.0, std::abs(partner_potential(spec, PartnerSign::Plus, x)));
            CHECK(shape_invariance_defect(spec, x) < 1e-8 * scale);
            ++checked;
        } catch (const SingularPoint&) {
        }
    }
    CHECK(checked > 60);
}

TEST_CASE("property: hyperbolic family is PT-symmetric for all real a, b") {
    std::mt19937_64 rng(505);
    std::uniform_real_distribution<double> up(-6.0, 6.0), ux(-4.0, 4.0);
    for (int trial = 0; trial < 200; ++trial) {
        const PotentialSpec spec = PotentialSpec::hyperbolic(trial % 5, up(rng), up(rng), 1.0);
        const double x = ux(rng);
        try {
            CHECK(pt_defect(spec, x) < 1e-10 * std::max(1.0, std::abs(potential_value(spec, x))));
        } catch (const SingularPoint&) {
        }
    }
}

TEST_CASE("property: reflection symmetry of classical Jacobi") {
    std::mt19937_64 rng(606);
    std::uniform_real_distribution<double> up(-4.0, 4.0), ux(-1.0, 1.0);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = trial % 9;
        const double a = up(rng), b = up(rng), x = ux(rng);
        const double lhs = jacobi_eval(JacobiParam{a, b, n}, -x);
        const double rhs = (n % 2 ? -1.0 : 1.0) * jacobi_eval(JacobiParam{b, a, n}, x);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12).scale(1.0));
    }
}

TEST_CASE("property: energies of the family are m-independent after reindexing") {
    std::mt19937_64 rng(707);
    for (int trial = 0; trial < 50; ++trial) {
        const Draw d = admissible_draw(rng, 1 + trial % 4);
        for (int j = 0; j <= 5; ++j) {
            CHECK(energy(PotentialSpec::trig(d.m, d.a, d.b, 1.0), d.m + j) ==
                  energy(PotentialSpec::trig(0, d.a, d.b, 1.0), j));
        }
    }
}
