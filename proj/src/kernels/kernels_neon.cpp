// aarch64 NEON is part of the base ISA, so no runtime check is needed.

#include "kernels_impl.hpp"

#include <arm_neon.h>
#include <cmath>

namespace mlca::kernels::detail {

double dot_neon(const double* x, const double* y, std::size_t n)
{
    float64x2_t acc0 = vdupq_n_f64(0.0);
    float64x2_t acc1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc0 = vfmaq_f64(acc0, vld1q_f64(x + i), vld1q_f64(y + i));
        acc1 = vfmaq_f64(acc1, vld1q_f64(x + i + 2), vld1q_f64(y + i + 2));
    }
    double sum = vaddvq_f64(vaddq_f64(acc0, acc1));
    for (; i < n; ++i) {
        sum += x[i] * y[i];
    }
    return sum;
}

void axpy_neon(double a, const double* x, double* y, std::size_t n)
{
    const float64x2_t va = vdupq_n_f64(a);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), va, vld1q_f64(x + i)));
    }
    for (; i < n; ++i) {
        y[i] += a * x[i];
    }
}

void gemv_neon(const double* m, std::size_t rows, std::size_t cols, const double* x, double* y)
{
    for (std::size_t r = 0; r < rows; ++r) {
        y[r] = dot_neon(m + r * cols, x, cols);
    }
}

double max_abs_neon(const double* x, std::size_t n)
{
    float64x2_t best = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        best = vmaxq_f64(best, vabsq_f64(vld1q_f64(x + i)));
    }
    double result = vmaxvq_f64(best);
    for (; i < n; ++i) {
        result = std::fmax(result, std::fabs(x[i]));
    }
    return result;
}

} // namespace mlca::kernels::detail
