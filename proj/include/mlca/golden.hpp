#pragma once

#include "mlca/registry.hpp"

#include <string>
#include <vector>

namespace mlca {

struct GoldenCheck
{
    std::string group;
    std::string name;
    double expected = 0.0;
    double actual = 0.0;
    double lo = 0.0; // accepted interval for `actual`
    double hi = 0.0;

    bool pass() const { return actual >= lo && actual <= hi; }
};

// Published base-case totals per mode, in indicator order.
struct PublishedTotals
{
    std::string_view mode_id;
    std::array<double, kIndicatorCount> totals;
};

const std::vector<PublishedTotals>& published_totals();

// Every headline number the bundled dataset is expected to reproduce.
std::vector<GoldenCheck> run_golden_checks(const Dataset& ds);

} // namespace mlca
