#pragma once

#include "mlca/dataset.hpp"
#include "mlca/mode_model.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace mlca {

// ---- analysis ---------------------------------------------------------------

struct NormalizedMatrix
{
    std::vector<std::string> modes;
    std::vector<ImpactVector> values; // one row per mode, each column divided by its maximum

    bool operator==(const NormalizedMatrix&) const = default;
};

// Throws NormalizationError when a column maximum is not positive.
NormalizedMatrix normalize(const std::vector<AssessmentResult>& results);
NormalizedMatrix normalize(const NormalizedMatrix& m);

// Ascending by total; ties broken by mode id.
std::vector<std::string> rank(const std::vector<AssessmentResult>& results, Indicator ind);

struct ComparisonRow
{
    std::string id;
    std::string label;
    double value = 0.0;
    std::string source; // "computed" or "reference"

    bool operator==(const ComparisonRow&) const = default;
};

// Reference values only exist for GWP; refs are filtered to one set.
std::vector<ComparisonRow> compare_reference(const std::vector<AssessmentResult>& results,
                                             const std::vector<ReferenceMode>& refs, std::string_view set);

// ---- CSV --------------------------------------------------------------------

// mode,scenario,indicator,unit,component,value; per (result, indicator) a total row then the components.
std::string results_csv(const std::vector<AssessmentResult>& results);
std::string matrix_csv(const NormalizedMatrix& m);
std::string comparison_csv(const std::vector<ComparisonRow>& rows);
std::string contribution_csv(const ContributionShares& c);

// 6 significant digits.
std::string format_value(double v);

// ---- SVG --------------------------------------------------------------------

struct BarSeries
{
    std::string name;
    std::vector<double> values; // one per category
};

struct BarChart
{
    std::string title;
    std::string unit;
    std::vector<std::string> categories;
    std::vector<BarSeries> series;
};

std::string bar_chart_svg(const BarChart& chart);
std::string radar_chart_svg(const NormalizedMatrix& m, std::string_view title);

// Throws IoError.
void write_output(const std::filesystem::path& path, std::string_view content);

} // namespace mlca
