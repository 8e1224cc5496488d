// Dense LU with partial pivoting. The inventory systems here have tens of
// processes, so a dense factorization is both simpler and fast enough.

#include "mlca/errors.hpp"
#include "mlca/kernels.hpp"
#include "mlca/lci.hpp"

#include <cmath>
#include <limits>
#include <numeric>

namespace mlca {

namespace {

struct Lu
{
    std::size_t n = 0;
    std::vector<double> lu;
    std::vector<std::size_t> perm;

    std::span<double> row(std::size_t i) { return {lu.data() + i * n, n}; }
    std::span<const double> row(std::size_t i) const { return {lu.data() + i * n, n}; }
};

double norm1(const std::vector<double>& a, std::size_t n)
{
    double best = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            s += std::fabs(a[i * n + j]);
        }
        best = std::max(best, s);
    }
    return best;
}

Lu factor(const MatrixSystem& sys)
{
    Lu f;
    f.n = sys.size();
    f.lu = sys.A;
    f.perm.resize(f.n);
    std::iota(f.perm.begin(), f.perm.end(), std::size_t{0});

    const std::size_t n = f.n;
    const double scale = norm1(sys.A, n);
    const double tiny = std::max(scale, 1.0) * std::numeric_limits<double>::epsilon() * 1e-2;

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        double best = std::fabs(f.lu[k * n + k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            double v = std::fabs(f.lu[i * n + k]);
            if (v > best) {
                best = v;
                p = i;
            }
        }
        if (best <= tiny) {
            throw SingularSystemError(sys.products[k], fmt::format("technology matrix is singular at product '{}'",
                                                                   sys.products[k]));
        }
        if (p != k) {
            std::swap_ranges(f.lu.begin() + static_cast<std::ptrdiff_t>(k * n),
                             f.lu.begin() + static_cast<std::ptrdiff_t>((k + 1) * n),
                             f.lu.begin() + static_cast<std::ptrdiff_t>(p * n));
            std::swap(f.perm[k], f.perm[p]);
        }
        const double pivot = f.lu[k * n + k];
        const std::size_t tail = n - k - 1;
        auto pivot_tail = f.row(k).subspan(k + 1, tail);
        for (std::size_t i = k + 1; i < n; ++i) {
            double& lik = f.lu[i * n + k];
            if (lik == 0.0) {
                continue;
            }
            lik /= pivot;
            kernels::axpy(-lik, pivot_tail, f.row(i).subspan(k + 1, tail));
        }
    }
    return f;
}

std::vector<double> lu_solve(const Lu& f, std::span<const double> b)
{
    const std::size_t n = f.n;
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = b[f.perm[i]];
    }
    for (std::size_t i = 0; i < n; ++i) {
        x[i] -= kernels::dot(f.row(i).first(i), std::span<const double>(x).first(i));
    }
    for (std::size_t i = n; i-- > 0;) {
        const std::size_t tail = n - i - 1;
        double s = x[i] - kernels::dot(f.row(i).subspan(i + 1, tail), std::span<const double>(x).subspan(i + 1, tail));
        x[i] = s / f.lu[i * n + i];
    }
    return x;
}

std::vector<double> residual(const MatrixSystem& sys, std::span<const double> s)
{
    const std::size_t n = sys.size();
    std::vector<double> as(n, 0.0);
    kernels::gemv(sys.A, n, n, s, as);
    std::vector<double> r(sys.f);
    kernels::axpy(-1.0, as, r);
    return r;
}

struct Conditioning
{
    double kappa = 0.0;
    std::size_t worst = 0;
};

Conditioning conditioning(const MatrixSystem& sys, const Lu& f)
{
    const std::size_t n = sys.size();
    Conditioning c;
    double inv_norm = 0.0;
    std::vector<double> e(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        e[j] = 1.0;
        auto col = lu_solve(f, e);
        e[j] = 0.0;
        double s = 0.0;
        for (double v : col) {
            s += std::fabs(v);
        }
        if (s > inv_norm || !std::isfinite(s)) {
            inv_norm = s;
            c.worst = j;
        }
    }
    c.kappa = norm1(sys.A, n) * inv_norm;
    return c;
}

void check_shape(const MatrixSystem& sys)
{
    const std::size_t n = sys.size();
    if (sys.A.size() != n * n || sys.f.size() != n || sys.processes.size() != n ||
        sys.B.size() != sys.elementary.size() * n) {
        throw Error("matrix system dimensions are inconsistent");
    }
}

} // namespace

double condition_number(const MatrixSystem& sys)
{
    check_shape(sys);
    if (sys.size() == 0) {
        return 0.0;
    }
    return conditioning(sys, factor(sys)).kappa;
}

std::vector<double> solve_scaling(const MatrixSystem& sys, const SolverOptions& opts)
{
    check_shape(sys);
    const std::size_t n = sys.size();
    if (n == 0) {
        return {};
    }
    const Lu f = factor(sys);

    const auto cond = conditioning(sys, f);
    if (!(cond.kappa <= opts.condition_limit)) {
        const auto& product = sys.products[cond.worst];
        throw SingularSystemError(product, fmt::format("technology matrix is near-singular (condition {:.3g}); "
                                                       "worst-determined product '{}'",
                                                       cond.kappa, product));
    }

    auto s = lu_solve(f, sys.f);
    const double fnorm = kernels::max_abs(sys.f);
    const double bound = opts.residual_tolerance * fnorm;

    auto r = residual(sys, s);
    if (kernels::max_abs(r) > bound) {
        auto d = lu_solve(f, r);
        kernels::axpy(1.0, d, s);
        r = residual(sys, s);
    }
    if (kernels::max_abs(r) > bound) {
        std::size_t worst = 0;
        for (std::size_t i = 1; i < n; ++i) {
            if (std::fabs(r[i]) > std::fabs(r[worst])) {
                worst = i;
            }
        }
        throw SingularSystemError(sys.products[worst],
                                  fmt::format("residual {:.3g} exceeds tolerance at product '{}'",
                                              kernels::max_abs(r), sys.products[worst]));
    }
    return s;
}

} // namespace mlca
