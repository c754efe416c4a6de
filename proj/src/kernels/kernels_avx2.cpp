// Compiled with -mavx2; only reached after a runtime CPUID check.
#include "kernels_impl.hpp"

#include <immintrin.h>

namespace xmscarf::kernels::detail {

void fd2_interior_avx2(std::span<const double> f, std::span<double> out, double scale) {
    const std::size_t n = f.size();
    if (n < 5) return;
    const double* p = f.data();
    const __m256d c16 = _mm256_set1_pd(16.0);
    const __m256d c30 = _mm256_set1_pd(30.0);
    const __m256d vs = _mm256_set1_pd(scale);
    std::size_t i = 2;
    for (; i + 2 + 3 < n; i += 4) {
        const __m256d near = _mm256_add_pd(_mm256_loadu_pd(p + i - 1), _mm256_loadu_pd(p + i + 1));
        const __m256d far = _mm256_add_pd(_mm256_loadu_pd(p + i - 2), _mm256_loadu_pd(p + i + 2));
        const __m256d mid = _mm256_loadu_pd(p + i);
        __m256d r = _mm256_sub_pd(_mm256_mul_pd(c16, near), far);
        r = _mm256_sub_pd(r, _mm256_mul_pd(c30, mid));
        _mm256_storeu_pd(out.data() + i, _mm256_mul_pd(r, vs));
    }
    for (; i + 2 < n; ++i) {
        const double near = p[i - 1] + p[i + 1];
        const double far = p[i - 2] + p[i + 2];
        out[i] = ((16.0 * near - far) - 30.0 * p[i]) * scale;
    }
}

void sturm_count4_avx2(std::span<const double> diag, std::span<const double> off_sq,
                       const double* shifts, double pivmin, int* counts) {
    const std::size_t n = diag.size();
    const __m256d sigma = _mm256_loadu_pd(shifts);
    const __m256d vpiv = _mm256_set1_pd(pivmin);
    const __m256d neg_piv = _mm256_set1_pd(-pivmin);
    const __m256d zero = _mm256_setzero_pd();
    const __m256d sign_mask = _mm256_set1_pd(-0.0);
    __m256i count = _mm256_setzero_si256();

    auto guard = [&](__m256d q) {
        const __m256d absq = _mm256_andnot_pd(sign_mask, q);
        const __m256d tiny = _mm256_cmp_pd(absq, vpiv, _CMP_LT_OQ);
        return _mm256_blendv_pd(q, neg_piv, tiny);
    };
    auto tally = [&](__m256d q) {
        // all-ones lanes are -1 as int64, so subtracting adds one
        const __m256d neg = _mm256_cmp_pd(q, zero, _CMP_LT_OQ);
        count = _mm256_sub_epi64(count, _mm256_castpd_si256(neg));
    };

    __m256d q = guard(_mm256_sub_pd(_mm256_set1_pd(diag[0]), sigma));
    tally(q);
    for (std::size_t i = 1; i < n; ++i) {
        const __m256d d = _mm256_sub_pd(_mm256_set1_pd(diag[i]), sigma);
        q = guard(_mm256_sub_pd(d, _mm256_div_pd(_mm256_set1_pd(off_sq[i - 1]), q)));
        tally(q);
    }
    alignas(32) long long lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), count);
    for (int l = 0; l < 4; ++l) counts[l] = static_cast<int>(lanes[l]);
}

double weighted_dot_avx2(std::span<const double> w, std::span<const double> f,
                         std::span<const double> g) {
    const std::size_t n = w.size();
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 3 < n; i += 4) {
        const __m256d t = _mm256_mul_pd(_mm256_loadu_pd(w.data() + i), _mm256_loadu_pd(f.data() + i));
        acc = _mm256_add_pd(acc, _mm256_mul_pd(t, _mm256_loadu_pd(g.data() + i)));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double s = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (; i < n; ++i) s += w[i] * f[i] * g[i];
    return s;
}

} // namespace xmscarf::kernels::detail
