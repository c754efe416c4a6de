#include "kernels_impl.hpp"

namespace xmscarf::kernels::detail {

void fd2_interior_scalar(std::span<const double> f, std::span<double> out, double scale) {
    const std::size_t n = f.size();
    if (n < 5) return;
    for (std::size_t i = 2; i + 2 < n; ++i) {
        const double near = f[i - 1] + f[i + 1];
        const double far = f[i - 2] + f[i + 2];
        out[i] = ((16.0 * near - far) - 30.0 * f[i]) * scale;
    }
}

void sturm_count4_scalar(std::span<const double> diag, std::span<const double> off_sq,
                         const double* shifts, double pivmin, int* counts) {
    const std::size_t n = diag.size();
    for (int lane = 0; lane < 4; ++lane) {
        const double sigma = shifts[lane];
        int count = 0;
        double q = diag[0] - sigma;
        if (std::abs(q) < pivmin) q = -pivmin;
        if (q < 0.0) ++count;
        for (std::size_t i = 1; i < n; ++i) {
            q = (diag[i] - sigma) - off_sq[i - 1] / q;
            if (std::abs(q) < pivmin) q = -pivmin;
            if (q < 0.0) ++count;
        }
        counts[lane] = count;
    }
}

double weighted_dot_scalar(std::span<const double> w, std::span<const double> f,
                           std::span<const double> g) {
    double s = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * f[i] * g[i];
    return s;
}

} // namespace xmscarf::kernels::detail
