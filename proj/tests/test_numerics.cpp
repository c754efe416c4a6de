#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "support/oracles.hpp"
#include "xmscarf/errors.hpp"
#include "xmscarf/numerics.hpp"

using namespace xmscarf;

TEST_CASE("gauss-legendre small orders") {
    const QuadratureRule one = gauss_legendre(1);
    REQUIRE(one.nodes.size() == 1);
    CHECK(one.nodes[0] == doctest::Approx(0.0));
    CHECK(one.weights[0] == doctest::Approx(2.0));

    const QuadratureRule two = gauss_legendre(2);
    CHECK(two.nodes[0] == doctest::Approx(-1.0 / std::sqrt(3.0)));
    CHECK(two.nodes[1] == doctest::Approx(1.0 / std::sqrt(3.0)));
    CHECK(two.weights[0] == doctest::Approx(1.0));
    CHECK(two.weights[1] == doctest::Approx(1.0));

    const QuadratureRule five = gauss_legendre(5);
    double s = 0.0;
    for (int i = 0; i < 5; ++i) s += five.weights[i] * std::pow(five.nodes[i], 8);
    CHECK(std::abs(s - 2.0 / 9.0) < 1e-14);
    CHECK_THROWS_AS(gauss_legendre(0), InvalidArgument);
}

TEST_CASE("gauss-legendre invariants") {
    for (int order : {3, 21, 64, 200}) {
        const QuadratureRule r = gauss_legendre(order);
        double sum = 0.0;
        for (double w : r.weights) {
            CHECK(w > 0.0);
            sum += w;
        }
        CHECK(std::abs(sum - 2.0) < 1e-13);
        CHECK(std::is_sorted(r.nodes.begin(), r.nodes.end()));
        CHECK(std::adjacent_find(r.nodes.begin(), r.nodes.end()) == r.nodes.end());
        CHECK(r.nodes.front() > -1.0);
        CHECK(r.nodes.back() < 1.0);
    }
    const QuadratureRule r = gauss_legendre(21);
    for (int p = 0; p <= 40; ++p) {
        double s = 0.0;
        for (int i = 0; i < 21; ++i) s += r.weights[i] * std::pow(r.nodes[i], p);
        const double exact = p % 2 ? 0.0 : 2.0 / (p + 1);
        CHECK(std::abs(s - exact) < 1e-12);
    }
}

TEST_CASE("graded rule integrates endpoint singularities") {
    // int (1-x)^a (1+x)^b dx = 2^(a+b+1) B(a+1, b+1)
    for (auto [a, b] : std::vector<std::pair<double, double>>{{-0.5, -0.5}, {-0.7, 0.3}, {0.2, -0.9}, {2.0, 1.0}}) {
        const GradedRule g = graded_gauss_legendre(200, grading_for_exponents(a, b));
        double s = 0.0;
        for (std::size_t i = 0; i < g.nodes.size(); ++i) {
            s += g.weights[i] * std::pow(g.one_minus[i], a) * std::pow(g.one_plus[i], b);
        }
        const double exact = std::pow(2.0, a + b + 1) * std::tgamma(a + 1) * std::tgamma(b + 1) / std::tgamma(a + b + 2);
        INFO("a=" << a << " b=" << b);
        CHECK(s == doctest::Approx(exact).epsilon(1e-12));
    }
    const GradedRule g = graded_gauss_legendre(50, 4);
    double total = 0.0;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        total += g.weights[i];
        CHECK(g.one_minus[i] + g.one_plus[i] == doctest::Approx(2.0));
        CHECK(g.one_minus[i] > 0.0);
        CHECK(g.one_plus[i] > 0.0);
    }
    CHECK(total == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(grading_for_exponents(2.0, 3.0) == 4);
    CHECK(grading_for_exponents(-0.9, 0.0) >= 40);
    CHECK(grading_for_exponents(-0.999, 0.0) == 64);
}

TEST_CASE("tridiagonal eigenvalues: analytic cases") {
    const auto ev = eigen_sym_tridiag(TridiagonalSystem{{2, 2, 2}, {-1, -1}}, 3);
    CHECK(std::abs(ev[0] - (2 - std::sqrt(2.0))) < 1e-12);
    CHECK(std::abs(ev[1] - 2.0) < 1e-12);
    CHECK(std::abs(ev[2] - (2 + std::sqrt(2.0))) < 1e-12);

    const auto ones = eigen_sym_tridiag(TridiagonalSystem{{1, 1, 1, 1}, {0, 0, 0}}, 4);
    for (double v : ones) CHECK(std::abs(v - 1.0) < 1e-12);

    const int n = 500;
    const auto lap = eigen_sym_tridiag(TridiagonalSystem{std::vector<double>(n, 2.0), std::vector<double>(n - 1, -1.0)}, 20);
    REQUIRE(lap.size() == 20);
    for (int j = 1; j <= 20; ++j) {
        CHECK(std::abs(lap[j - 1] - (2 - 2 * std::cos(j * std::numbers::pi / (n + 1)))) < 4e-12);
    }
    CHECK_THROWS_AS(eigen_sym_tridiag(TridiagonalSystem{{1, 2}, {0.5}}, 3), InvalidArgument);
}

TEST_CASE("tridiagonal eigenvalues match brute-force characteristic roots") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int trial = 0; trial < 40; ++trial) {
        const int dim = 1 + trial % 4;
        std::vector<double> d(dim), e(dim - 1);
        for (double& v : d) v = u(rng);
        for (double& v : e) v = u(rng);
        const auto ev = eigen_sym_tridiag(TridiagonalSystem{d, e}, dim);
        const auto ref = oracle::brute_force_eigenvalues(d, e, -12.0, 12.0);
        REQUIRE(ref.size() == static_cast<std::size_t>(dim));
        for (int i = 0; i < dim; ++i) CHECK(std::abs(ev[i] - ref[i]) < 1e-10);
    }
}

TEST_CASE("sturm count") {
    const TridiagonalSystem sys{{2, 2, 2}, {-1, -1}};
    CHECK(sturm_count(sys, 0.0) == 0);
    CHECK(sturm_count(sys, 1.0) == 1);
    CHECK(sturm_count(sys, 2.5) == 2);
    CHECK(sturm_count(sys, 10.0) == 3);
}

TEST_CASE("fourth-order second derivative") {
    const double h = 0.01;
    std::vector<double> sq, sn, cst(50, 3.0);
    for (int i = 0; i < 50; ++i) {
        sq.push_back((i * h) * (i * h));
        sn.push_back(std::sin(0.2 + i * h));
    }
    for (double v : fd_second_derivative(sq, h)) CHECK(std::abs(v - 2.0) < 1e-10);
    for (double v : fd_second_derivative(cst, h)) CHECK(std::abs(v) < 1e-10);
    const auto d2 = fd_second_derivative(sn, h);
    for (int i = 0; i < 50; ++i) CHECK(std::abs(d2[i] + sn[i]) < 1e-8);
    // five samples: every point uses a one-sided or central five-point formula
    std::vector<double> cube;
    for (int i = 0; i < 5; ++i) cube.push_back(std::pow(0.1 * i, 3));
    const auto d5 = fd_second_derivative(cube, 0.1);
    for (int i = 0; i < 5; ++i) CHECK(d5[i] == doctest::Approx(6 * 0.1 * i).epsilon(1e-9).scale(1.0));
    CHECK_THROWS_AS(fd_second_derivative(std::vector<double>(4, 1.0), h), InvalidArgument);
}

TEST_CASE("finite-difference convergence slope is four") {
    std::vector<double> hs, errs;
    for (double h : {0.04, 0.02, 0.01, 0.005}) {
        const int n = static_cast<int>(std::lround(3.0 / h)) + 1;
        std::vector<double> f(n);
        for (int i = 0; i < n; ++i) f[i] = std::exp(std::sin(i * h));
        const auto d2 = fd_second_derivative(f, h);
        double err = 0.0;
        for (int i = 0; i < n; ++i) {
            const double x = i * h;
            const double exact = std::exp(std::sin(x)) * (std::cos(x) * std::cos(x) - std::sin(x));
            err = std::max(err, std::abs(d2[i] - exact));
        }
        hs.push_back(h);
        errs.push_back(err);
    }
    CHECK(oracle::loglog_slope(hs, errs) == doctest::Approx(4.0).epsilon(0.08));
}
