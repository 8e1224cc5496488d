#include "mlca/errors.hpp"
#include "mlca/kernels.hpp"
#include "mlca/lci.hpp"

#include <cmath>

namespace mlca {

MatrixSystem assemble(const BackgroundDatabase& db, const Demand& demand)
{
    MatrixSystem sys;
    const auto& procs = db.processes();
    const std::size_t n = procs.size();

    std::map<std::string, std::size_t, std::less<>> row_of;
    sys.products.reserve(n);
    sys.processes.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        row_of.emplace(procs[j].reference_product, j);
        sys.products.push_back(procs[j].reference_product);
        sys.processes.push_back(procs[j].id);
    }

    std::map<std::string, std::size_t, std::less<>> elem_row;
    for (const auto& fl : db.flows()) {
        if (fl.kind == FlowKind::Elementary) {
            elem_row.emplace(fl.id, sys.elementary.size());
            sys.elementary.push_back(fl.id);
        }
    }
    const std::size_t m = sys.elementary.size();

    sys.A.assign(n * n, 0.0);
    sys.B.assign(m * n, 0.0);
    sys.f.assign(n, 0.0);

    for (std::size_t j = 0; j < n; ++j) {
        const auto& p = procs[j];
        sys.A[j * n + j] += p.reference_amount;
        for (const auto& ex : p.exchanges) {
            if (auto e = elem_row.find(ex.flow_id); e != elem_row.end()) {
                sys.B[e->second * n + j] += ex.amount;
                continue;
            }
            const std::size_t r = row_of.at(ex.flow_id);
            sys.A[r * n + j] += ex.direction == Direction::Output ? ex.amount : -ex.amount;
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        if (!(sys.A[i * n + i] > 0.0)) {
            throw IntegrityError("process '{}' consumes at least as much '{}' as it produces", sys.processes[i],
                                 sys.products[i]);
        }
    }

    for (const auto& [id, amount] : demand) {
        const Flow* fl = db.find_flow(id);
        if (fl == nullptr) {
            throw UnresolvableDemandError("demanded flow '{}' does not exist", id);
        }
        auto r = row_of.find(id);
        if (r == row_of.end()) {
            throw UnresolvableDemandError("demanded flow '{}' is not produced by any process", id);
        }
        if (!std::isfinite(amount)) {
            throw UnresolvableDemandError("demand for '{}' is not finite", id);
        }
        sys.f[r->second] += amount;
    }
    return sys;
}

FlowVector inventory(const MatrixSystem& sys, std::span<const double> s)
{
    const std::size_t n = sys.size();
    const std::size_t m = sys.elementary.size();
    std::vector<double> g(m, 0.0);
    if (n > 0 && m > 0) {
        kernels::gemv(sys.B, m, n, s, g);
    }
    FlowVector out;
    for (std::size_t r = 0; r < m; ++r) {
        out.entries.emplace(sys.elementary[r], g[r]);
    }
    return out;
}

double FlowVector::operator[](std::string_view id) const
{
    auto it = entries.find(id);
    return it == entries.end() ? 0.0 : it->second;
}

FlowVector& FlowVector::operator+=(const FlowVector& o)
{
    for (const auto& [id, v] : o.entries) {
        entries[id] += v;
    }
    return *this;
}

FlowVector& FlowVector::operator*=(double s)
{
    for (auto& [id, v] : entries) {
        v *= s;
    }
    return *this;
}

} // namespace mlca
