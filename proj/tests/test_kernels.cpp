#include <doctest.h>

#include <cstdlib>
#include <random>
#include <vector>

#include "xmscarf/kernels.hpp"
#include "xmscarf/numerics.hpp"

using namespace xmscarf;
namespace k = xmscarf::kernels;

namespace {

std::vector<double> random_vector(std::size_t n, unsigned seed, double lo = -1.0, double hi = 1.0) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(lo, hi);
    std::vector<double> v(n);
    for (double& x : v) x = u(rng);
    return v;
}

} // namespace

TEST_CASE("scalar table is always available") {
    CHECK(k::scalar_table().isa == k::Isa::scalar);
    CHECK(std::string(k::isa_name(k::Isa::scalar)) == "scalar");
    CHECK(std::string(k::isa_name(k::Isa::avx2)) == "avx2");
}

TEST_CASE("stencil kernel: scalar and avx2 agree bitwise") {
    const k::KernelTable* simd = k::avx2_table();
    if (simd == nullptr) {
        MESSAGE("AVX2 not available on this machine; equivalence test skipped");
        return;
    }
    for (std::size_t n : {5u, 6u, 7u, 8u, 9u, 13u, 64u, 1001u}) {
        const auto f = random_vector(n, static_cast<unsigned>(n));
        std::vector<double> a(n, -7.0), b(n, -7.0);
        k::scalar_table().fd2_interior(f, a, 1.0 / 144.0);
        simd->fd2_interior(f, b, 1.0 / 144.0);
        INFO("n=" << n);
        CHECK(a == b);
        CHECK(a[0] == -7.0);
        CHECK(a[n - 1] == -7.0);
    }
}

TEST_CASE("sturm kernel: scalar and avx2 agree") {
    const k::KernelTable* simd = k::avx2_table();
    if (simd == nullptr) return;
    for (std::size_t n : {1u, 2u, 3u, 17u, 400u}) {
        const auto d = random_vector(n, 3u + static_cast<unsigned>(n), -2.0, 2.0);
        auto e = random_vector(n > 0 ? n - 1 : 0, 9u + static_cast<unsigned>(n));
        for (double& x : e) x *= x;
        for (int trial = 0; trial < 20; ++trial) {
            const auto s = random_vector(4, 100u + trial, -4.0, 4.0);
            int ca[4], cb[4];
            k::scalar_table().sturm_count4(d, e, s.data(), 1e-300, ca);
            simd->sturm_count4(d, e, s.data(), 1e-300, cb);
            for (int l = 0; l < 4; ++l) CHECK(ca[l] == cb[l]);
        }
    }
}

TEST_CASE("sturm kernel matches the scalar reference count") {
    const std::vector<double> d{2, 2, 2}, e{1, 1};
    const TridiagonalSystem sys{d, {-1, -1}};
    const double shifts[4] = {0.0, 1.0, 2.5, 10.0};
    int c[4];
    k::active().sturm_count4(d, e, shifts, 1e-300, c);
    for (int l = 0; l < 4; ++l) CHECK(c[l] == sturm_count(sys, shifts[l]));
}

TEST_CASE("weighted dot: scalar and avx2 agree to rounding") {
    const auto w = random_vector(1003, 1, 0.0, 1.0);
    const auto f = random_vector(1003, 2);
    const auto g = random_vector(1003, 3);
    const double ref = k::scalar_table().weighted_dot(w, f, g);
    if (const k::KernelTable* simd = k::avx2_table()) {
        CHECK(simd->weighted_dot(w, f, g) == doctest::Approx(ref).epsilon(1e-13));
    }
    double naive = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) naive += w[i] * f[i] * g[i];
    CHECK(ref == doctest::Approx(naive).epsilon(1e-13));
}

TEST_CASE("eigenvalues identical under both dispatch paths") {
    const int n = 300;
    const TridiagonalSystem sys{random_vector(n, 77, 0.0, 5.0), random_vector(n - 1, 78)};
    const auto ref = eigen_sym_tridiag(sys, 10, k::scalar_table());
    for (int i = 1; i < 10; ++i) CHECK(ref[i - 1] <= ref[i]);
    for (int i = 0; i < 10; ++i) {
        CHECK(sturm_count(sys, ref[i] - 1e-9) <= i);
        CHECK(sturm_count(sys, ref[i] + 1e-9) >= i + 1);
    }
    if (const k::KernelTable* simd = k::avx2_table()) {
        CHECK(eigen_sym_tridiag(sys, 10, *simd) == ref);
    }
}
