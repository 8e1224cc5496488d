#include "kernels_impl.hpp"

#include <cmath>

namespace mlca::kernels::detail {

double dot_scalar(const double* x, const double* y, std::size_t n)
{
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sum += x[i] * y[i];
    }
    return sum;
}

void axpy_scalar(double a, const double* x, double* y, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i) {
        y[i] += a * x[i];
    }
}

void gemv_scalar(const double* m, std::size_t rows, std::size_t cols, const double* x, double* y)
{
    for (std::size_t r = 0; r < rows; ++r) {
        y[r] = dot_scalar(m + r * cols, x, cols);
    }
}

double max_abs_scalar(const double* x, std::size_t n)
{
    double best = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double v = std::fabs(x[i]);
        if (v > best) {
            best = v;
        }
    }
    return best;
}

} // namespace mlca::kernels::detail
