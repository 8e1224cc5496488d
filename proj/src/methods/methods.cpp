#include "mlca/methods.hpp"
#include "mlca/csv.hpp"
#include "mlca/errors.hpp"
#include "mlca/kernels.hpp"
#include "mlca/text.hpp"
#include "mlca/units.hpp"

#include <cmath>

namespace mlca {

void CharacterizationFactorSet::add(CfEntry entry)
{
    if (!std::isfinite(entry.factor)) {
        throw IntegrityError("non-finite factor for '{}' / {}", entry.flow_id, to_string(entry.indicator));
    }
    auto key = std::make_pair(entry.flow_id, entry.indicator);
    if (_index.contains(key)) {
        throw IntegrityError("duplicate factor for '{}' / {}", entry.flow_id, to_string(entry.indicator));
    }
    _index.emplace(std::move(key), _entries.size());
    _entries.push_back(std::move(entry));
}

std::optional<double> CharacterizationFactorSet::factor(std::string_view flow_id, Indicator ind) const
{
    auto it = _index.find(std::make_pair(std::string(flow_id), ind));
    if (it == _index.end()) {
        return std::nullopt;
    }
    return _entries[it->second].factor;
}

bool CharacterizationFactorSet::defines(Indicator ind) const
{
    for (const auto& e : _entries) {
        if (e.indicator == ind) {
            return true;
        }
    }
    return false;
}

std::vector<const CfEntry*> CharacterizationFactorSet::for_indicator(Indicator ind) const
{
    std::vector<const CfEntry*> out;
    for (const auto& e : _entries) {
        if (e.indicator == ind) {
            out.push_back(&e);
        }
    }
    return out;
}

CharacterizationFactorSet parse_method(const CsvDocument& doc, const std::vector<Flow>& flows)
{
    const auto c_flow = doc.require_column("flow_id");
    const auto c_comp = doc.require_column("compartment");
    const auto c_ind = doc.require_column("indicator");
    const auto c_factor = doc.require_column("factor");
    const auto c_unit = doc.require_column("unit");
    const auto c_prov = doc.require_column("provenance");

    std::map<std::string, const Flow*, std::less<>> by_id;
    for (const auto& f : flows) {
        by_id.emplace(f.id, &f);
    }

    CharacterizationFactorSet cf;
    for (const auto& row : doc.rows()) {
        CfEntry e;
        e.flow_id = doc.cell(row, c_flow);
        e.compartment = doc.cell(row, c_comp);
        auto ind = parse_indicator(doc.cell(row, c_ind));
        if (!ind) {
            throw doc.error(row, fmt::format("unknown indicator '{}'", doc.cell(row, c_ind)));
        }
        e.indicator = *ind;
        e.factor = doc.number(row, c_factor);
        e.unit = doc.cell(row, c_unit);
        e.provenance = doc.cell(row, c_prov);

        auto fit = by_id.find(e.flow_id);
        if (fit == by_id.end()) {
            throw DanglingReferenceError(fmt::format("{}:{}", doc.source(), row.line), e.flow_id);
        }
        const Flow& fl = *fit->second;
        if (fl.kind != FlowKind::Elementary) {
            throw doc.error(row, fmt::format("flow '{}' is not elementary", e.flow_id));
        }
        if (fl.compartment != e.compartment) {
            throw doc.error(row, fmt::format("compartment '{}' does not match flow '{}' ({})", e.compartment,
                                             e.flow_id, fl.compartment));
        }
        const auto slash = e.unit.rfind('/');
        const std::string expected_head(indicator_info(e.indicator).unit);
        if (slash == std::string::npos || e.unit.substr(0, slash) != expected_head ||
            e.unit.substr(slash + 1) != fl.unit) {
            throw doc.error(row, fmt::format("unit '{}' should be '{}/{}'", e.unit, expected_head, fl.unit));
        }
        try {
            cf.add(std::move(e));
        } catch (const IntegrityError& err) {
            throw doc.error(row, err.what());
        }
    }
    return cf;
}

CharacterizationFactorSet load_method(const std::filesystem::path& file, const std::vector<Flow>& flows)
{
    return parse_method(CsvDocument::read_file(file), flows);
}

std::string serialize_method(const CharacterizationFactorSet& cf)
{
    std::string out = csv_line({"flow_id", "compartment", "indicator", "factor", "unit", "provenance"});
    for (const auto& e : cf.entries()) {
        out += csv_line({e.flow_id, e.compartment, std::string(to_string(e.indicator)), text::format_exact(e.factor),
                         e.unit, e.provenance});
    }
    return out;
}

double characterize(const FlowVector& g, const CharacterizationFactorSet& cf, Indicator ind,
                    CoverageReport* coverage)
{
    std::vector<double> amounts;
    std::vector<double> factors;
    amounts.reserve(g.entries.size());
    factors.reserve(g.entries.size());
    for (const auto& [id, amount] : g.entries) {
        auto f = cf.factor(id, ind);
        if (!f) {
            if (coverage != nullptr && amount != 0.0) {
                coverage->missing.push_back(id);
            }
            continue;
        }
        amounts.push_back(amount);
        factors.push_back(*f);
    }
    return kernels::dot(amounts, factors);
}

double characterize(const FlowVector& g, const CharacterizationFactorSet& cf, std::string_view indicator_id,
                    CoverageReport* coverage)
{
    return characterize(g, cf, indicator_from_string(indicator_id), coverage);
}

ImpactVector apply_all(const FlowVector& g, const CharacterizationFactorSet& cf,
                       std::map<Indicator, CoverageReport>* coverage)
{
    ImpactVector out;
    for (auto ind : kAllIndicators) {
        out[ind] = characterize(g, cf, ind, coverage != nullptr ? &(*coverage)[ind] : nullptr);
    }
    return out;
}

ImpactVector lifecycle_impact(const BackgroundDatabase& db, const CharacterizationFactorSet& cf,
                              const Demand& demand)
{
    auto sys = assemble(db, demand);
    auto s = solve_scaling(sys);
    return apply_all(inventory(sys, s), cf);
}

} // namespace mlca
