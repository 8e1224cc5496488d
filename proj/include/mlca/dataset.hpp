#pragma once

#include "mlca/impact.hpp"
#include "mlca/lci.hpp"
#include "mlca/mode_model.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mlca {

class CsvDocument;

// ---- background database -------------------------------------------------

std::vector<Flow> parse_flows(const CsvDocument& doc);
std::string serialize_flows(const std::vector<Flow>& flows);

// Long format, one row per exchange; the reference row of each process has type "reference".
std::vector<UnitProcess> parse_processes(const CsvDocument& doc);
std::string serialize_processes(const std::vector<UnitProcess>& processes);

// flows file plus any number of process files (background and foreground LCIs).
BackgroundDatabase parse_database(const std::filesystem::path& flows_file,
                                  const std::vector<std::filesystem::path>& process_files);

// ---- electricity, freight -------------------------------------------------

MixTable parse_mixes(const CsvDocument& doc);
std::string serialize_mixes(const MixTable& mixes);

enum class FreightMode
{
    Sea,
    Road,
    RailDiesel,
    RailElectric,
    Air,
};

std::string_view to_string(FreightMode m);
std::optional<FreightMode> parse_freight_mode(std::string_view text);

struct FreightFactor
{
    FreightMode mode = FreightMode::Road;
    ImpactVector per_tkm;
    std::string provenance;

    bool operator==(const FreightFactor&) const = default;
};

using FreightTable = std::map<FreightMode, FreightFactor>;

FreightTable parse_freight(const CsvDocument& doc);
std::string serialize_freight(const FreightTable& table);

// ---- traffic and infrastructure -------------------------------------------

struct TrafficRow
{
    std::string mode;
    std::optional<double> vkt; // blank cells are kept as unknown
    std::string infrastructure; // one type, or several separated by ';'
    std::string source;

    bool operator==(const TrafficRow&) const = default;
};

std::vector<TrafficRow> parse_traffic(const CsvDocument& doc);
std::string serialize_traffic(const std::vector<TrafficRow>& rows);

// Sum of the populated rows for one infrastructure type. Throws DomainError when zero.
double traffic_total(const std::vector<TrafficRow>& rows, std::string_view infrastructure);

struct LciLine
{
    std::string flow_id; // product id, or "infra:<id>" to include another infrastructure LCI
    double amount = 0.0;
    std::string unit;

    bool operator==(const LciLine&) const = default;
};

// Annual LCI of one unit of infrastructure (one m2, one linear metre...).
struct InfrastructureLci
{
    std::string infra_id;
    std::string functional_unit;
    std::vector<LciLine> lines;

    bool operator==(const InfrastructureLci&) const = default;
};

std::vector<InfrastructureLci> parse_infrastructure(const CsvDocument& doc);
std::string serialize_infrastructure(const std::vector<InfrastructureLci>& rows);

struct NetworkRow
{
    std::string infra_id;
    double quantity = 0.0;
    std::string unit;
    std::string traffic; // traffic.csv infrastructure type used for 1/VKT
    std::string provenance;

    bool operator==(const NetworkRow&) const = default;
};

std::vector<NetworkRow> parse_networks(const CsvDocument& doc);
std::string serialize_networks(const std::vector<NetworkRow>& rows);

// ---- HBEFA tailpipe --------------------------------------------------------

struct HbefaRow
{
    std::string pollutant;
    std::string flow_id;
    std::string category;
    double g_per_vkt = 0.0;

    bool operator==(const HbefaRow&) const = default;
};

std::vector<HbefaRow> parse_hbefa(const CsvDocument& doc);
std::string serialize_hbefa(const std::vector<HbefaRow>& rows);

// ---- surveys ----------------------------------------------------------------

struct SurveyRow
{
    std::string label;
    double percent = 0.0;
    std::vector<double> values; // one per extra column

    bool operator==(const SurveyRow&) const = default;
};

struct SurveyTable
{
    std::vector<std::string> columns; // names of the extra columns
    std::vector<SurveyRow> rows;

    std::size_t column(std::string_view name) const; // throws DataError
    double percent_sum() const;

    bool operator==(const SurveyTable&) const = default;
};

SurveyTable parse_survey(const CsvDocument& doc);
std::string serialize_survey(const SurveyTable& table);

// ---- calibrated components ------------------------------------------------

struct CalibratedEntry
{
    std::string mode;
    Indicator indicator = Indicator::GWP100;
    double total = 0.0;
    std::vector<std::pair<std::string, double>> shares; // component -> raw share (percent / 100)

    double share_sum() const;
    // Component impacts: total x share / sum(shares), so they add up to the total.
    std::vector<std::pair<std::string, double>> components() const;
    double component(std::string_view name) const;

    bool operator==(const CalibratedEntry&) const = default;
};

struct CalibratedComponentTable
{
    std::vector<CalibratedEntry> entries;

    const CalibratedEntry* find(std::string_view mode, Indicator ind) const;
    std::vector<std::string> modes() const; // first-appearance order

    bool operator==(const CalibratedComponentTable&) const = default;
};

CalibratedComponentTable parse_calibrated(const CsvDocument& doc);
std::string serialize_calibrated(const CalibratedComponentTable& table);

// ---- scenario level tables --------------------------------------------------

struct ScenarioLevel
{
    std::string mode;
    std::string level; // worst, pessimistic, base, optimistic
    double value = 0.0;
    std::string service_vehicle; // servicing table only, empty = keep the mode's own

    bool operator==(const ScenarioLevel&) const = default;
};

std::vector<ScenarioLevel> parse_levels(const CsvDocument& doc, std::string_view value_column);
std::string serialize_levels(const std::vector<ScenarioLevel>& rows, std::string_view value_column,
                             bool with_service_vehicle);

struct ShippingLeg
{
    FreightMode mode = FreightMode::Road;
    double distance_km = 0.0;

    bool operator==(const ShippingLeg&) const = default;
};

struct ShippingRoute
{
    std::string route_id;
    std::string market;
    std::string label;
    std::vector<ShippingLeg> legs;

    double distance_km() const;
    bool operator==(const ShippingRoute&) const = default;
};

std::vector<ShippingRoute> parse_routes(const CsvDocument& doc);
std::string serialize_routes(const std::vector<ShippingRoute>& routes);

// ---- references and parameters ------------------------------------------------

struct ReferenceMode
{
    std::string set; // "paris", "us"
    std::string mode_id;
    std::string label;
    double gwp_kg_per_pkt = 0.0;
    std::string provenance;

    bool operator==(const ReferenceMode&) const = default;
};

std::vector<ReferenceMode> parse_references(const CsvDocument& doc);
std::string serialize_references(const std::vector<ReferenceMode>& refs);

struct Parameter
{
    std::string key;
    double value = 0.0;
    std::string unit;
    std::string note;

    bool operator==(const Parameter&) const = default;
};

class ParameterTable
{
public:
    ParameterTable() = default;
    explicit ParameterTable(std::vector<Parameter> rows);

    double get(std::string_view key) const; // throws DataError
    const std::vector<Parameter>& rows() const noexcept { return _rows; }

    bool operator==(const ParameterTable& o) const { return _rows == o._rows; }

private:
    std::vector<Parameter> _rows;
};

ParameterTable parse_parameters(const CsvDocument& doc);
std::string serialize_parameters(const ParameterTable& table);

// ---- mode definition files ------------------------------------------------------

struct FleetRef
{
    std::string variant;
    double share = 0.0;
    std::string product;

    bool operator==(const FleetRef&) const = default;
};

// Sections [mode], [vehicle], [use], [servicing]. Service vehicle files have no [mode].
struct ModeDefinition
{
    std::string id;
    std::string label;
    Ownership ownership = Ownership::Private;
    double occupancy = 1.0;
    std::vector<std::string> infrastructure;
    bool has_mode_section = true;

    std::string vehicle_id;
    double mass_kg = 0.0;
    double lifetime_km = 0.0;
    std::string lci; // product whose lifecycle impact is one vehicle
    std::vector<FleetRef> fleet;

    EnergyCarrier carrier = EnergyCarrier::None;
    double consumption = 0.0;
    std::string mix;
    std::string fuel_product;
    std::string tailpipe; // "hbefa" to use the corrected HBEFA table

    double servicing_m_per_vkt = 0.0;
    std::string service_vehicle;

    bool operator==(const ModeDefinition&) const = default;
};

ModeDefinition parse_mode_definition(std::string_view text, const std::string& source);
ModeDefinition load_mode_definition(const std::filesystem::path& file);
std::string serialize_mode_definition(const ModeDefinition& def);

} // namespace mlca
