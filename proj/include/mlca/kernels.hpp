#pragma once

// Dense double-precision kernels used by the inventory solver and the
// characterization step. Every kernel has a scalar reference implementation;
// vector variants (AVX2+FMA on x86-64, NEON on aarch64) are selected once at
// startup from the CPU features and can be forced back to scalar with
// MLCA_SIMD=scalar.

#include <cstddef>
#include <span>
#include <string_view>

namespace mlca::kernels {

enum class Isa { Scalar, Avx2, Neon };

std::string_view isa_name(Isa isa);

struct KernelTable {
    Isa isa;
    // sum_i x[i] * y[i]
    double (*dot)(const double* x, const double* y, std::size_t n);
    // y[i] += a * x[i]
    void (*axpy)(double a, const double* x, double* y, std::size_t n);
    // y = M x, M row-major rows x cols
    void (*gemv)(const double* m, std::size_t rows, std::size_t cols, const double* x, double* y);
    // max_i |x[i]|
    double (*max_abs)(const double* x, std::size_t n);
};

const KernelTable& scalar_table();

// nullptr when the variant was not compiled in or the CPU lacks the feature.
const KernelTable* avx2_table();
const KernelTable* neon_table();

// Table picked at first use. Thread-safe.
const KernelTable& active();

// Test hook: pin the active table. Not thread-safe against concurrent kernel calls.
void set_active(const KernelTable& table);

double dot(std::span<const double> x, std::span<const double> y);
void axpy(double a, std::span<const double> x, std::span<double> y);
void gemv(std::span<const double> m, std::size_t rows, std::size_t cols, std::span<const double> x,
          std::span<double> y);
double max_abs(std::span<const double> x);

} // namespace mlca::kernels
