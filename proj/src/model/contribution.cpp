#include "mlca/mode_model.hpp"

#include <fmt/format.h>

#include <limits>

namespace mlca {

ContributionShares contribution_breakdown(const AssessmentResult& result)
{
    ContributionShares out;
    out.mode_id = result.mode_id;
    const auto comps = result.components();
    for (const auto& c : comps) {
        out.components.push_back(c.component);
    }
    for (auto ind : kAllIndicators) {
        auto& col = out.shares[index_of(ind)];
        const double total = result.total[ind];
        if (total == 0.0) {
            col.assign(comps.size(), std::numeric_limits<double>::quiet_NaN());
            out.notices.push_back(fmt::format("{}: total is zero, shares undefined", to_string(ind)));
            continue;
        }
        for (const auto& c : comps) {
            col.push_back(c.impact[ind] / total);
        }
    }
    return out;
}

} // namespace mlca
