#pragma once

#include "mlca/impact.hpp"
#include "mlca/lci.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mlca {

class CsvDocument;

struct CfEntry
{
    std::string flow_id;
    std::string compartment;
    Indicator indicator = Indicator::GWP100;
    double factor = 0.0;
    std::string unit; // "<indicator unit>/<flow unit>"
    std::string provenance;

    bool operator==(const CfEntry&) const = default;
};

class CharacterizationFactorSet
{
public:
    // Throws IntegrityError on a duplicate (flow, indicator) pair.
    void add(CfEntry entry);

    std::optional<double> factor(std::string_view flow_id, Indicator ind) const;
    bool defines(Indicator ind) const;

    const std::vector<CfEntry>& entries() const noexcept { return _entries; }
    std::size_t size() const noexcept { return _entries.size(); }
    bool empty() const noexcept { return _entries.empty(); }

    // Entries grouped per indicator, in file order within each group.
    std::vector<const CfEntry*> for_indicator(Indicator ind) const;

    bool operator==(const CharacterizationFactorSet& o) const { return _entries == o._entries; }

private:
    std::vector<CfEntry> _entries;
    std::map<std::pair<std::string, Indicator>, std::size_t, std::less<>> _index;
};

// Validates flows against `flows`: the flow must exist, be elementary, carry the
// same compartment, and the unit denominator must be the flow's unit.
CharacterizationFactorSet parse_method(const CsvDocument& doc, const std::vector<Flow>& flows);
CharacterizationFactorSet load_method(const std::filesystem::path& file, const std::vector<Flow>& flows);
std::string serialize_method(const CharacterizationFactorSet& cf);

struct CoverageReport
{
    // Flows with a nonzero amount but no factor for the indicator.
    std::vector<std::string> missing;
};

double characterize(const FlowVector& g, const CharacterizationFactorSet& cf, Indicator ind,
                    CoverageReport* coverage = nullptr);

// Throws UnknownIndicatorError.
double characterize(const FlowVector& g, const CharacterizationFactorSet& cf, std::string_view indicator_id,
                    CoverageReport* coverage = nullptr);

ImpactVector apply_all(const FlowVector& g, const CharacterizationFactorSet& cf,
                       std::map<Indicator, CoverageReport>* coverage = nullptr);

// assemble + solve + inventory + apply_all in one call.
ImpactVector lifecycle_impact(const BackgroundDatabase& db, const CharacterizationFactorSet& cf,
                              const Demand& demand);

} // namespace mlca
