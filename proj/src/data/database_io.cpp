#include "mlca/csv.hpp"
#include "mlca/dataset.hpp"
#include "mlca/errors.hpp"
#include "mlca/text.hpp"

#include <array>

namespace mlca {

namespace {

std::array<std::string, kIndicatorCount> indicator_columns()
{
    std::array<std::string, kIndicatorCount> out;
    for (auto ind : kAllIndicators) {
        out[index_of(ind)] = std::string(to_string(ind));
    }
    return out;
}

ImpactVector read_impacts(const CsvDocument& doc, const CsvDocument::Row& row, bool nonnegative)
{
    ImpactVector v;
    for (auto ind : kAllIndicators) {
        const auto col = doc.require_column(to_string(ind));
        v[ind] = doc.number(row, col);
        if (nonnegative && v[ind] < 0.0) {
            throw doc.error(row, fmt::format("{} must not be negative", to_string(ind)));
        }
    }
    return v;
}

void append_impacts(std::vector<std::string>& fields, const ImpactVector& v)
{
    for (auto ind : kAllIndicators) {
        fields.push_back(text::format_exact(v[ind]));
    }
}

} // namespace

std::vector<Flow> parse_flows(const CsvDocument& doc)
{
    const auto c_id = doc.require_column("id");
    const auto c_kind = doc.require_column("kind");
    const auto c_name = doc.require_column("name");
    const auto c_unit = doc.require_column("unit");
    const auto c_comp = doc.require_column("compartment");

    std::vector<Flow> flows;
    for (const auto& row : doc.rows()) {
        Flow f;
        f.id = doc.cell(row, c_id);
        auto kind = parse_flow_kind(doc.cell(row, c_kind));
        if (!kind) {
            throw doc.error(row, fmt::format("unknown flow kind '{}'", doc.cell(row, c_kind)));
        }
        f.kind = *kind;
        f.name = doc.cell(row, c_name);
        f.unit = doc.cell(row, c_unit);
        f.compartment = doc.cell(row, c_comp);
        if (f.id.empty()) {
            throw doc.error(row, "empty flow id");
        }
        flows.push_back(std::move(f));
    }
    return flows;
}

std::string serialize_flows(const std::vector<Flow>& flows)
{
    std::string out = csv_line({"id", "kind", "name", "unit", "compartment"});
    for (const auto& f : flows) {
        out += csv_line({f.id, std::string(to_string(f.kind)), f.name, f.unit, f.compartment});
    }
    return out;
}

std::vector<UnitProcess> parse_processes(const CsvDocument& doc)
{
    const auto c_id = doc.require_column("process_id");
    const auto c_name = doc.require_column("name");
    const auto c_type = doc.require_column("type");
    const auto c_flow = doc.require_column("flow_id");
    const auto c_dir = doc.require_column("direction");
    const auto c_amount = doc.require_column("amount");
    const auto c_unit = doc.require_column("unit");

    std::vector<UnitProcess> procs;
    std::map<std::string, std::size_t, std::less<>> index;
    std::vector<bool> has_reference;

    for (const auto& row : doc.rows()) {
        const auto& id = doc.cell(row, c_id);
        if (id.empty()) {
            throw doc.error(row, "empty process id");
        }
        auto [it, fresh] = index.emplace(id, procs.size());
        if (fresh) {
            procs.push_back(UnitProcess{id, "", "", 1.0, {}});
            has_reference.push_back(false);
        }
        auto& p = procs[it->second];
        if (!doc.cell(row, c_name).empty()) {
            if (!p.name.empty() && p.name != doc.cell(row, c_name)) {
                throw doc.error(row, fmt::format("process '{}' has two names", id));
            }
            p.name = doc.cell(row, c_name);
        }

        auto dir = parse_direction(doc.cell(row, c_dir));
        if (!dir) {
            throw doc.error(row, fmt::format("unknown direction '{}'", doc.cell(row, c_dir)));
        }
        const double amount = doc.number(row, c_amount);
        const auto type = text::lower(doc.cell(row, c_type));

        if (type == "reference") {
            if (has_reference[it->second]) {
                throw doc.error(row, fmt::format("process '{}' has more than one reference product", id));
            }
            if (*dir != Direction::Output || !(amount > 0.0)) {
                throw doc.error(row, "reference product must be a positive output");
            }
            has_reference[it->second] = true;
            p.reference_product = doc.cell(row, c_flow);
            p.reference_amount = amount;
        } else if (type == "exchange") {
            p.exchanges.push_back(Exchange{doc.cell(row, c_flow), amount, doc.cell(row, c_unit), *dir});
        } else {
            throw doc.error(row, fmt::format("unknown row type '{}'", doc.cell(row, c_type)));
        }
    }

    for (std::size_t i = 0; i < procs.size(); ++i) {
        if (!has_reference[i]) {
            throw ParseError(doc.source(), 0, fmt::format("process '{}' has no reference product", procs[i].id));
        }
    }
    return procs;
}

std::string serialize_processes(const std::vector<UnitProcess>& processes)
{
    std::string out = csv_line({"process_id", "name", "type", "flow_id", "direction", "amount", "unit"});
    for (const auto& p : processes) {
        out += csv_line({p.id, p.name, "reference", p.reference_product, "output", text::format_exact(p.reference_amount),
                         ""});
        for (const auto& ex : p.exchanges) {
            out += csv_line({p.id, "", "exchange", ex.flow_id, std::string(to_string(ex.direction)),
                             text::format_exact(ex.amount), ex.unit});
        }
    }
    return out;
}

BackgroundDatabase parse_database(const std::filesystem::path& flows_file,
                                  const std::vector<std::filesystem::path>& process_files)
{
    auto flows = parse_flows(CsvDocument::read_file(flows_file));
    std::vector<UnitProcess> procs;
    for (const auto& file : process_files) {
        auto more = parse_processes(CsvDocument::read_file(file));
        procs.insert(procs.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
    }
    return BackgroundDatabase(std::move(flows), std::move(procs));
}

MixTable parse_mixes(const CsvDocument& doc)
{
    const auto c_id = doc.require_column("mix_id");
    const auto c_name = doc.require_column("name");
    MixTable mixes;
    for (const auto& row : doc.rows()) {
        ElectricityMix m{doc.cell(row, c_id), doc.cell(row, c_name), read_impacts(doc, row, true)};
        if (m.id.empty()) {
            throw doc.error(row, "empty mix id");
        }
        auto id = m.id;
        if (!mixes.emplace(id, std::move(m)).second) {
            throw doc.error(row, fmt::format("duplicate mix '{}'", id));
        }
    }
    return mixes;
}

std::string serialize_mixes(const MixTable& mixes)
{
    std::vector<std::string> header{"mix_id", "name"};
    for (const auto& c : indicator_columns()) {
        header.push_back(c);
    }
    std::string out = csv_line(header);
    for (const auto& [id, m] : mixes) {
        std::vector<std::string> fields{m.id, m.name};
        append_impacts(fields, m.per_kwh);
        out += csv_line(fields);
    }
    return out;
}

std::string_view to_string(FreightMode m)
{
    switch (m) {
    case FreightMode::Sea: return "sea";
    case FreightMode::Road: return "road";
    case FreightMode::RailDiesel: return "rail_diesel";
    case FreightMode::RailElectric: return "rail_electric";
    case FreightMode::Air: return "air";
    }
    return "road";
}

std::optional<FreightMode> parse_freight_mode(std::string_view text)
{
    for (auto m : {FreightMode::Sea, FreightMode::Road, FreightMode::RailDiesel, FreightMode::RailElectric,
                   FreightMode::Air}) {
        if (text::trim(text) == to_string(m)) {
            return m;
        }
    }
    return std::nullopt;
}

FreightTable parse_freight(const CsvDocument& doc)
{
    const auto c_mode = doc.require_column("mode");
    const auto c_prov = doc.require_column("provenance");
    FreightTable table;
    for (const auto& row : doc.rows()) {
        auto mode = parse_freight_mode(doc.cell(row, c_mode));
        if (!mode) {
            throw doc.error(row, fmt::format("unknown freight mode '{}'", doc.cell(row, c_mode)));
        }
        FreightFactor f{*mode, read_impacts(doc, row, true), doc.cell(row, c_prov)};
        if (!table.emplace(*mode, std::move(f)).second) {
            throw doc.error(row, fmt::format("duplicate freight mode '{}'", doc.cell(row, c_mode)));
        }
    }
    return table;
}

std::string serialize_freight(const FreightTable& table)
{
    std::vector<std::string> header{"mode"};
    for (const auto& c : indicator_columns()) {
        header.push_back(c);
    }
    header.push_back("provenance");
    std::string out = csv_line(header);
    for (const auto& [mode, f] : table) {
        std::vector<std::string> fields{std::string(to_string(mode))};
        append_impacts(fields, f.per_tkm);
        fields.push_back(f.provenance);
        out += csv_line(fields);
    }
    return out;
}

} // namespace mlca
