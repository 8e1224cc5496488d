#include "kernels_impl.hpp"

#include <atomic>
#include <cassert>
#include <cstdlib>
#include <string_view>

namespace mlca::kernels {

using namespace detail;

std::string_view isa_name(Isa isa)
{
    switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
    }
    return "unknown";
}

const KernelTable& scalar_table()
{
    static const KernelTable table{Isa::Scalar, dot_scalar, axpy_scalar, gemv_scalar, max_abs_scalar};
    return table;
}

const KernelTable* avx2_table()
{
#if defined(MLCA_HAVE_AVX2)
    static const bool supported = [] {
        __builtin_cpu_init();
        return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    }();
    static const KernelTable table{Isa::Avx2, dot_avx2, axpy_avx2, gemv_avx2, max_abs_avx2};
    return supported ? &table : nullptr;
#else
    return nullptr;
#endif
}

const KernelTable* neon_table()
{
#if defined(MLCA_HAVE_NEON)
    static const KernelTable table{Isa::Neon, dot_neon, axpy_neon, gemv_neon, max_abs_neon};
    return &table;
#else
    return nullptr;
#endif
}

namespace {

const KernelTable* select_table()
{
    if (const char* env = std::getenv("MLCA_SIMD"); env != nullptr && std::string_view(env) == "scalar") {
        return &scalar_table();
    }
    if (const auto* t = avx2_table()) {
        return t;
    }
    if (const auto* t = neon_table()) {
        return t;
    }
    return &scalar_table();
}

std::atomic<const KernelTable*>& active_slot()
{
    static std::atomic<const KernelTable*> slot{select_table()};
    return slot;
}

} // namespace

const KernelTable& active()
{
    return *active_slot().load(std::memory_order_acquire);
}

void set_active(const KernelTable& table)
{
    active_slot().store(&table, std::memory_order_release);
}

double dot(std::span<const double> x, std::span<const double> y)
{
    assert(x.size() == y.size());
    return active().dot(x.data(), y.data(), x.size());
}

void axpy(double a, std::span<const double> x, std::span<double> y)
{
    assert(x.size() == y.size());
    active().axpy(a, x.data(), y.data(), x.size());
}

void gemv(std::span<const double> m, std::size_t rows, std::size_t cols, std::span<const double> x,
          std::span<double> y)
{
    assert(m.size() == rows * cols && x.size() == cols && y.size() == rows);
    active().gemv(m.data(), rows, cols, x.data(), y.data());
}

double max_abs(std::span<const double> x)
{
    return active().max_abs(x.data(), x.size());
}

} // namespace mlca::kernels
