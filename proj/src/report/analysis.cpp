#include "mlca/errors.hpp"
#include "mlca/report.hpp"

#include <algorithm>
#include <cmath>

namespace mlca {

NormalizedMatrix normalize(const NormalizedMatrix& m)
{
    if (m.modes.empty()) {
        throw NormalizationError("nothing to normalize");
    }
    NormalizedMatrix out = m;
    for (auto ind : kAllIndicators) {
        double mx = -INFINITY;
        for (const auto& row : m.values) {
            mx = std::max(mx, row[ind]);
        }
        if (!(mx > 0.0) || !std::isfinite(mx)) {
            throw NormalizationError("{}: column maximum is {}, cannot normalize", to_string(ind), mx);
        }
        for (auto& row : out.values) {
            // exact 1 for the maximum even if a division would round
            row[ind] = row[ind] == mx ? 1.0 : row[ind] / mx;
        }
    }
    return out;
}

NormalizedMatrix normalize(const std::vector<AssessmentResult>& results)
{
    NormalizedMatrix m;
    for (const auto& r : results) {
        m.modes.push_back(r.scenario.empty() ? r.mode_id : r.mode_id + "@" + r.scenario);
        m.values.push_back(r.total);
    }
    return normalize(m);
}

std::vector<std::string> rank(const std::vector<AssessmentResult>& results, Indicator ind)
{
    std::vector<const AssessmentResult*> order;
    for (const auto& r : results) {
        order.push_back(&r);
    }
    std::sort(order.begin(), order.end(), [&](const auto* a, const auto* b) {
        if (a->total[ind] != b->total[ind]) {
            return a->total[ind] < b->total[ind];
        }
        return a->mode_id < b->mode_id;
    });
    std::vector<std::string> out;
    for (const auto* r : order) {
        out.push_back(r->mode_id);
    }
    return out;
}

std::vector<ComparisonRow> compare_reference(const std::vector<AssessmentResult>& results,
                                             const std::vector<ReferenceMode>& refs, std::string_view set)
{
    std::vector<ComparisonRow> rows;
    for (const auto& r : results) {
        rows.push_back({r.mode_id, r.mode_id, r.total[Indicator::GWP100], "computed"});
    }
    for (const auto& ref : refs) {
        if (ref.set == set) {
            rows.push_back({ref.mode_id, ref.label, ref.gwp_kg_per_pkt, "reference"});
        }
    }
    std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        if (a.value != b.value) {
            return a.value < b.value;
        }
        return a.id < b.id;
    });
    return rows;
}

} // namespace mlca
