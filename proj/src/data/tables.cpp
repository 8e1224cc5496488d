#include "mlca/csv.hpp"
#include "mlca/dataset.hpp"
#include "mlca/errors.hpp"
#include "mlca/text.hpp"

#include <algorithm>
#include <set>

namespace mlca {

using text::format_exact;

std::vector<TrafficRow> parse_traffic(const CsvDocument& doc)
{
    const auto c_mode = doc.require_column("mode");
    const auto c_vkt = doc.require_column("vkt");
    const auto c_infra = doc.require_column("infrastructure");
    const auto c_source = doc.require_column("source");
    std::vector<TrafficRow> rows;
    for (const auto& row : doc.rows()) {
        TrafficRow t{doc.cell(row, c_mode), doc.optional_number(row, c_vkt), doc.cell(row, c_infra),
                     doc.cell(row, c_source)};
        if (t.vkt && *t.vkt < 0.0) {
            throw doc.error(row, "traffic must not be negative");
        }
        rows.push_back(std::move(t));
    }
    return rows;
}

std::string serialize_traffic(const std::vector<TrafficRow>& rows)
{
    std::string out = csv_line({"mode", "vkt", "infrastructure", "source"});
    for (const auto& t : rows) {
        out += csv_line({t.mode, t.vkt ? format_exact(*t.vkt) : "", t.infrastructure, t.source});
    }
    return out;
}

double traffic_total(const std::vector<TrafficRow>& rows, std::string_view infrastructure)
{
    double sum = 0.0;
    for (const auto& t : rows) {
        if (!t.vkt) {
            continue;
        }
        for (const auto& part : text::split(t.infrastructure, ';')) {
            if (part == infrastructure) {
                sum += *t.vkt;
            }
        }
    }
    if (!(sum > 0.0)) {
        throw DomainError("no traffic recorded for infrastructure '{}'", infrastructure);
    }
    return sum;
}

std::vector<InfrastructureLci> parse_infrastructure(const CsvDocument& doc)
{
    const auto c_id = doc.require_column("infra_id");
    const auto c_fu = doc.require_column("functional_unit");
    const auto c_flow = doc.require_column("flow_id");
    const auto c_amount = doc.require_column("amount");
    const auto c_unit = doc.require_column("unit");

    std::vector<InfrastructureLci> out;
    for (const auto& row : doc.rows()) {
        const auto& id = doc.cell(row, c_id);
        auto it = std::find_if(out.begin(), out.end(), [&](const auto& r) { return r.infra_id == id; });
        if (it == out.end()) {
            out.push_back(InfrastructureLci{id, doc.cell(row, c_fu), {}});
            it = std::prev(out.end());
        } else if (it->functional_unit != doc.cell(row, c_fu)) {
            throw doc.error(row, fmt::format("infrastructure '{}' has two functional units", id));
        }
        it->lines.push_back(LciLine{doc.cell(row, c_flow), doc.number(row, c_amount), doc.cell(row, c_unit)});
    }
    return out;
}

std::string serialize_infrastructure(const std::vector<InfrastructureLci>& rows)
{
    std::string out = csv_line({"infra_id", "functional_unit", "flow_id", "amount", "unit"});
    for (const auto& r : rows) {
        for (const auto& l : r.lines) {
            out += csv_line({r.infra_id, r.functional_unit, l.flow_id, format_exact(l.amount), l.unit});
        }
    }
    return out;
}

std::vector<NetworkRow> parse_networks(const CsvDocument& doc)
{
    const auto c_id = doc.require_column("infra_id");
    const auto c_q = doc.require_column("quantity");
    const auto c_unit = doc.require_column("unit");
    const auto c_traffic = doc.require_column("traffic");
    const auto c_prov = doc.require_column("provenance");
    std::vector<NetworkRow> out;
    for (const auto& row : doc.rows()) {
        NetworkRow n{doc.cell(row, c_id), doc.number(row, c_q), doc.cell(row, c_unit), doc.cell(row, c_traffic),
                     doc.cell(row, c_prov)};
        if (!(n.quantity > 0.0)) {
            throw doc.error(row, "network quantity must be positive");
        }
        out.push_back(std::move(n));
    }
    return out;
}

std::string serialize_networks(const std::vector<NetworkRow>& rows)
{
    std::string out = csv_line({"infra_id", "quantity", "unit", "traffic", "provenance"});
    for (const auto& n : rows) {
        out += csv_line({n.infra_id, format_exact(n.quantity), n.unit, n.traffic, n.provenance});
    }
    return out;
}

std::vector<HbefaRow> parse_hbefa(const CsvDocument& doc)
{
    const auto c_pol = doc.require_column("pollutant");
    const auto c_flow = doc.require_column("flow_id");
    const auto c_cat = doc.require_column("category");
    const auto c_val = doc.require_column("g_per_vkt");
    std::vector<HbefaRow> out;
    for (const auto& row : doc.rows()) {
        HbefaRow h{doc.cell(row, c_pol), doc.cell(row, c_flow), doc.cell(row, c_cat), doc.number(row, c_val)};
        if (h.g_per_vkt < 0.0) {
            throw doc.error(row, "emission factor must not be negative");
        }
        out.push_back(std::move(h));
    }
    return out;
}

std::string serialize_hbefa(const std::vector<HbefaRow>& rows)
{
    std::string out = csv_line({"pollutant", "flow_id", "category", "g_per_vkt"});
    for (const auto& h : rows) {
        out += csv_line({h.pollutant, h.flow_id, h.category, format_exact(h.g_per_vkt)});
    }
    return out;
}

std::size_t SurveyTable::column(std::string_view name) const
{
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (columns[i] == name) {
            return i;
        }
    }
    throw DataError("survey table has no column '{}'", name);
}

double SurveyTable::percent_sum() const
{
    double s = 0.0;
    for (const auto& r : rows) {
        s += r.percent;
    }
    return s;
}

SurveyTable parse_survey(const CsvDocument& doc)
{
    const auto c_label = doc.require_column("answer");
    const auto c_pct = doc.require_column("percent");
    SurveyTable t;
    std::vector<std::size_t> extra;
    for (std::size_t i = 0; i < doc.header().size(); ++i) {
        if (i != c_label && i != c_pct) {
            t.columns.push_back(doc.header()[i]);
            extra.push_back(i);
        }
    }
    std::set<std::string> labels;
    for (const auto& row : doc.rows()) {
        SurveyRow r{doc.cell(row, c_label), doc.number(row, c_pct), {}};
        if (r.percent < 0.0 || r.percent > 100.0) {
            throw doc.error(row, "percent must lie in [0, 100]");
        }
        if (!labels.insert(r.label).second) {
            throw doc.error(row, fmt::format("duplicate answer '{}'", r.label));
        }
        for (auto c : extra) {
            r.values.push_back(doc.number(row, c));
        }
        t.rows.push_back(std::move(r));
    }
    return t;
}

std::string serialize_survey(const SurveyTable& table)
{
    std::vector<std::string> header{"answer", "percent"};
    header.insert(header.end(), table.columns.begin(), table.columns.end());
    std::string out = csv_line(header);
    for (const auto& r : table.rows) {
        std::vector<std::string> fields{r.label, format_exact(r.percent)};
        for (double v : r.values) {
            fields.push_back(format_exact(v));
        }
        out += csv_line(fields);
    }
    return out;
}

double CalibratedEntry::share_sum() const
{
    double s = 0.0;
    for (const auto& [name, v] : shares) {
        s += v;
    }
    return s;
}

std::vector<std::pair<std::string, double>> CalibratedEntry::components() const
{
    const double sum = share_sum();
    std::vector<std::pair<std::string, double>> out;
    for (const auto& [name, v] : shares) {
        out.emplace_back(name, total * v / sum);
    }
    return out;
}

double CalibratedEntry::component(std::string_view name) const
{
    double v = 0.0;
    for (const auto& [n, c] : components()) {
        if (n == name) {
            v += c;
        }
    }
    return v;
}

const CalibratedEntry* CalibratedComponentTable::find(std::string_view mode, Indicator ind) const
{
    for (const auto& e : entries) {
        if (e.mode == mode && e.indicator == ind) {
            return &e;
        }
    }
    return nullptr;
}

std::vector<std::string> CalibratedComponentTable::modes() const
{
    std::vector<std::string> out;
    for (const auto& e : entries) {
        if (std::find(out.begin(), out.end(), e.mode) == out.end()) {
            out.push_back(e.mode);
        }
    }
    return out;
}

CalibratedComponentTable parse_calibrated(const CsvDocument& doc)
{
    const auto c_mode = doc.require_column("mode");
    const auto c_ind = doc.require_column("indicator");
    const auto c_total = doc.require_column("total");
    const auto c_comp = doc.require_column("component");
    const auto c_share = doc.require_column("share");

    CalibratedComponentTable t;
    for (const auto& row : doc.rows()) {
        auto ind = parse_indicator(doc.cell(row, c_ind));
        if (!ind) {
            throw doc.error(row, fmt::format("unknown indicator '{}'", doc.cell(row, c_ind)));
        }
        const auto& mode = doc.cell(row, c_mode);
        const double total = doc.number(row, c_total);
        auto it = std::find_if(t.entries.begin(), t.entries.end(),
                               [&](const auto& e) { return e.mode == mode && e.indicator == *ind; });
        if (it == t.entries.end()) {
            t.entries.push_back(CalibratedEntry{mode, *ind, total, {}});
            it = std::prev(t.entries.end());
        } else if (it->total != total) {
            throw doc.error(row, fmt::format("inconsistent total for {} / {}", mode, to_string(*ind)));
        }
        const auto& comp = doc.cell(row, c_comp);
        for (const auto& [name, v] : it->shares) {
            if (name == comp) {
                throw doc.error(row, fmt::format("duplicate component '{}'", comp));
            }
        }
        it->shares.emplace_back(comp, doc.number(row, c_share));
    }
    return t;
}

std::string serialize_calibrated(const CalibratedComponentTable& table)
{
    std::string out = csv_line({"mode", "indicator", "total", "component", "share"});
    for (const auto& e : table.entries) {
        for (const auto& [name, v] : e.shares) {
            out += csv_line({e.mode, std::string(to_string(e.indicator)), format_exact(e.total), name, format_exact(v)});
        }
    }
    return out;
}

std::vector<ScenarioLevel> parse_levels(const CsvDocument& doc, std::string_view value_column)
{
    const auto c_mode = doc.require_column("mode");
    const auto c_level = doc.require_column("level");
    const auto c_value = doc.require_column(value_column);
    const auto c_sv = doc.column("service_vehicle");
    std::vector<ScenarioLevel> out;
    for (const auto& row : doc.rows()) {
        ScenarioLevel l{doc.cell(row, c_mode), doc.cell(row, c_level), doc.number(row, c_value),
                        c_sv ? doc.cell(row, *c_sv) : std::string()};
        if (l.value < 0.0) {
            throw doc.error(row, "scenario level must not be negative");
        }
        out.push_back(std::move(l));
    }
    return out;
}

std::string serialize_levels(const std::vector<ScenarioLevel>& rows, std::string_view value_column,
                             bool with_service_vehicle)
{
    std::vector<std::string> header{"mode", "level", std::string(value_column)};
    if (with_service_vehicle) {
        header.emplace_back("service_vehicle");
    }
    std::string out = csv_line(header);
    for (const auto& l : rows) {
        std::vector<std::string> fields{l.mode, l.level, format_exact(l.value)};
        if (with_service_vehicle) {
            fields.push_back(l.service_vehicle);
        }
        out += csv_line(fields);
    }
    return out;
}

double ShippingRoute::distance_km() const
{
    double d = 0.0;
    for (const auto& l : legs) {
        d += l.distance_km;
    }
    return d;
}

std::vector<ShippingRoute> parse_routes(const CsvDocument& doc)
{
    const auto c_id = doc.require_column("route_id");
    const auto c_market = doc.require_column("market");
    const auto c_label = doc.require_column("label");
    const auto c_mode = doc.require_column("freight_mode");
    const auto c_dist = doc.require_column("distance_km");
    std::vector<ShippingRoute> out;
    for (const auto& row : doc.rows()) {
        const auto& id = doc.cell(row, c_id);
        auto it = std::find_if(out.begin(), out.end(), [&](const auto& r) { return r.route_id == id; });
        if (it == out.end()) {
            out.push_back(ShippingRoute{id, doc.cell(row, c_market), doc.cell(row, c_label), {}});
            it = std::prev(out.end());
        }
        auto mode = parse_freight_mode(doc.cell(row, c_mode));
        if (!mode) {
            throw doc.error(row, fmt::format("unknown freight mode '{}'", doc.cell(row, c_mode)));
        }
        const double d = doc.number(row, c_dist);
        if (!(d > 0.0)) {
            throw doc.error(row, "leg distance must be positive");
        }
        it->legs.push_back(ShippingLeg{*mode, d});
    }
    return out;
}

std::string serialize_routes(const std::vector<ShippingRoute>& routes)
{
    std::string out = csv_line({"route_id", "market", "label", "freight_mode", "distance_km"});
    for (const auto& r : routes) {
        for (const auto& l : r.legs) {
            out += csv_line({r.route_id, r.market, r.label, std::string(to_string(l.mode)), format_exact(l.distance_km)});
        }
    }
    return out;
}

std::vector<ReferenceMode> parse_references(const CsvDocument& doc)
{
    const auto c_set = doc.require_column("set");
    const auto c_id = doc.require_column("mode_id");
    const auto c_label = doc.require_column("label");
    const auto c_gwp = doc.require_column("gwp_kg_per_pkt");
    const auto c_prov = doc.require_column("provenance");
    std::vector<ReferenceMode> out;
    for (const auto& row : doc.rows()) {
        out.push_back(ReferenceMode{doc.cell(row, c_set), doc.cell(row, c_id), doc.cell(row, c_label),
                                    doc.number(row, c_gwp), doc.cell(row, c_prov)});
    }
    return out;
}

std::string serialize_references(const std::vector<ReferenceMode>& refs)
{
    std::string out = csv_line({"set", "mode_id", "label", "gwp_kg_per_pkt", "provenance"});
    for (const auto& r : refs) {
        out += csv_line({r.set, r.mode_id, r.label, format_exact(r.gwp_kg_per_pkt), r.provenance});
    }
    return out;
}

ParameterTable::ParameterTable(std::vector<Parameter> rows)
: _rows(std::move(rows))
{
    std::set<std::string> seen;
    for (const auto& p : _rows) {
        if (!seen.insert(p.key).second) {
            throw DataError("duplicate parameter '{}'", p.key);
        }
    }
}

double ParameterTable::get(std::string_view key) const
{
    for (const auto& p : _rows) {
        if (p.key == key) {
            return p.value;
        }
    }
    throw DataError("missing parameter '{}'", key);
}

ParameterTable parse_parameters(const CsvDocument& doc)
{
    const auto c_key = doc.require_column("key");
    const auto c_value = doc.require_column("value");
    const auto c_unit = doc.require_column("unit");
    const auto c_note = doc.require_column("note");
    std::vector<Parameter> rows;
    for (const auto& row : doc.rows()) {
        rows.push_back(Parameter{doc.cell(row, c_key), doc.number(row, c_value), doc.cell(row, c_unit),
                                 doc.cell(row, c_note)});
    }
    try {
        return ParameterTable(std::move(rows));
    } catch (const DataError& e) {
        throw ParseError(doc.source(), 0, e.what());
    }
}

std::string serialize_parameters(const ParameterTable& table)
{
    std::string out = csv_line({"key", "value", "unit", "note"});
    for (const auto& p : table.rows()) {
        out += csv_line({p.key, format_exact(p.value), p.unit, p.note});
    }
    return out;
}

} // namespace mlca
