#pragma once

// Data-parallel inner loops with a scalar reference and an AVX2 variant.
// The active table is chosen once at startup from CPUID; XMSCARF_SIMD=scalar
// forces the reference path. The scalar and AVX2 stencil and Sturm kernels
// perform the same IEEE operations in the same order and agree bitwise;
// the reduction kernel differs only in summation order.

#include <cstddef>
#include <span>

namespace xmscarf::kernels {

enum class Isa { scalar, avx2 };

struct KernelTable {
    Isa isa;

    /// out[i] = (16(f[i-1]+f[i+1]) - (f[i-2]+f[i+2]) - 30 f[i]) * scale for
    /// 2 <= i < n-2; other entries of out are left untouched.
    void (*fd2_interior)(std::span<const double> f, std::span<double> out, double scale);

    /// Sturm counts of T - shift_l for four shifts at once: counts[l] is the
    /// number of eigenvalues of the symmetric tridiagonal T below shifts[l].
    /// off_sq[i] = e_i^2 (length n-1); pivmin guards zero pivots.
    void (*sturm_count4)(std::span<const double> diag, std::span<const double> off_sq,
                         const double* shifts, double pivmin, int* counts);

    /// sum_i w[i] f[i] g[i]
    double (*weighted_dot)(std::span<const double> w, std::span<const double> f,
                           std::span<const double> g);
};

const KernelTable& scalar_table();

/// nullptr when the build or the CPU lacks AVX2.
const KernelTable* avx2_table();

const KernelTable& active();

const char* isa_name(Isa isa);

} // namespace xmscarf::kernels
