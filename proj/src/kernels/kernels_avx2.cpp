// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.

#include "kernels_impl.hpp"

#include <cmath>
#include <immintrin.h>

namespace mlca::kernels::detail {

namespace {

inline double hsum(__m256d v)
{
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s  = _mm_add_pd(lo, hi);
    const __m128d sh = _mm_unpackhi_pd(s, s);
    return _mm_cvtsd_f64(_mm_add_sd(s, sh));
}

} // namespace

double dot_avx2(const double* x, const double* y, std::size_t n)
{
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4), acc1);
    }
    for (; i + 4 <= n; i += 4) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
    }
    double sum = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) {
        sum += x[i] * y[i];
    }
    return sum;
}

void axpy_avx2(double a, const double* x, double* y, std::size_t n)
{
    const __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d vy = _mm256_loadu_pd(y + i);
        _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), vy));
    }
    for (; i < n; ++i) {
        y[i] += a * x[i];
    }
}

void gemv_avx2(const double* m, std::size_t rows, std::size_t cols, const double* x, double* y)
{
    for (std::size_t r = 0; r < rows; ++r) {
        y[r] = dot_avx2(m + r * cols, x, cols);
    }
}

double max_abs_avx2(const double* x, std::size_t n)
{
    const __m256d sign = _mm256_set1_pd(-0.0);
    __m256d best = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        best = _mm256_max_pd(best, _mm256_andnot_pd(sign, _mm256_loadu_pd(x + i)));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, best);
    double result = std::fmax(std::fmax(lanes[0], lanes[1]), std::fmax(lanes[2], lanes[3]));
    for (; i < n; ++i) {
        result = std::fmax(result, std::fabs(x[i]));
    }
    return result;
}

} // namespace mlca::kernels::detail
