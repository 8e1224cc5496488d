#pragma once

#include "mlca/kernels.hpp"

namespace mlca::kernels::detail {

double dot_scalar(const double* x, const double* y, std::size_t n);
void axpy_scalar(double a, const double* x, double* y, std::size_t n);
void gemv_scalar(const double* m, std::size_t rows, std::size_t cols, const double* x, double* y);
double max_abs_scalar(const double* x, std::size_t n);

#if defined(MLCA_HAVE_AVX2)
double dot_avx2(const double* x, const double* y, std::size_t n);
void axpy_avx2(double a, const double* x, double* y, std::size_t n);
void gemv_avx2(const double* m, std::size_t rows, std::size_t cols, const double* x, double* y);
double max_abs_avx2(const double* x, std::size_t n);
#endif

#if defined(MLCA_HAVE_NEON)
double dot_neon(const double* x, const double* y, std::size_t n);
void axpy_neon(double a, const double* x, double* y, std::size_t n);
void gemv_neon(const double* m, std::size_t rows, std::size_t cols, const double* x, double* y);
double max_abs_neon(const double* x, std::size_t n);
#endif

} // namespace mlca::kernels::detail
