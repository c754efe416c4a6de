#pragma once

#include <cmath>

#include "xmscarf/kernels.hpp"

namespace xmscarf::kernels::detail {

void fd2_interior_scalar(std::span<const double> f, std::span<double> out, double scale);
void sturm_count4_scalar(std::span<const double> diag, std::span<const double> off_sq,
                         const double* shifts, double pivmin, int* counts);
double weighted_dot_scalar(std::span<const double> w, std::span<const double> f,
                           std::span<const double> g);

#if defined(XMSCARF_HAVE_AVX2)
void fd2_interior_avx2(std::span<const double> f, std::span<double> out, double scale);
void sturm_count4_avx2(std::span<const double> diag, std::span<const double> off_sq,
                       const double* shifts, double pivmin, int* counts);
double weighted_dot_avx2(std::span<const double> w, std::span<const double> f,
                         std::span<const double> g);
#endif

} // namespace xmscarf::kernels::detail
