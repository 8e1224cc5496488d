#include "mlca/csv.hpp"
#include "mlca/report.hpp"

#include <cmath>

namespace mlca {

std::string format_value(double v)
{
    if (v == 0.0) {
        return "0"; // also folds -0
    }
    if (std::isnan(v)) {
        return "";
    }
    return fmt::format("{:.6g}", v);
}

std::string results_csv(const std::vector<AssessmentResult>& results)
{
    std::string out = csv_line({"mode", "scenario", "indicator", "unit", "component", "value"});
    for (const auto& r : results) {
        const auto comps = r.components();
        for (auto ind : kAllIndicators) {
            const auto& info = indicator_info(ind);
            const std::string id(info.id);
            const std::string unit(info.unit);
            out += csv_line({r.mode_id, r.scenario, id, unit, "total", format_value(r.total[ind])});
            for (const auto& c : comps) {
                out += csv_line({r.mode_id, r.scenario, id, unit, c.component, format_value(c.impact[ind])});
            }
        }
    }
    return out;
}

std::string matrix_csv(const NormalizedMatrix& m)
{
    std::vector<std::string> header{"mode"};
    for (auto ind : kAllIndicators) {
        header.emplace_back(to_string(ind));
    }
    std::string out = csv_line(header);
    for (std::size_t i = 0; i < m.modes.size(); ++i) {
        std::vector<std::string> row{m.modes[i]};
        for (auto ind : kAllIndicators) {
            row.push_back(format_value(m.values[i][ind]));
        }
        out += csv_line(row);
    }
    return out;
}

std::string comparison_csv(const std::vector<ComparisonRow>& rows)
{
    std::string out = csv_line({"rank", "id", "label", "source", "GWP100"});
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        out += csv_line({std::to_string(i + 1), r.id, r.label, r.source, format_value(r.value)});
    }
    return out;
}

std::string contribution_csv(const ContributionShares& c)
{
    std::string out = csv_line({"mode", "indicator", "component", "share"});
    for (auto ind : kAllIndicators) {
        const auto& col = c.shares[index_of(ind)];
        for (std::size_t i = 0; i < c.components.size(); ++i) {
            out += csv_line({c.mode_id, std::string(to_string(ind)), c.components[i], format_value(col[i])});
        }
    }
    return out;
}

void write_output(const std::filesystem::path& path, std::string_view content)
{
    write_text_file(path, content);
}

} // namespace mlca
