#include "mlca/registry.hpp"
#include "mlca/csv.hpp"
#include "mlca/errors.hpp"
#include "mlca/text.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <set>

#ifndef MLCA_DATA_DIR
#define MLCA_DATA_DIR "data"
#endif

namespace mlca {

namespace fs = std::filesystem;

namespace {

CsvDocument doc(const fs::path& root, std::string_view name)
{
    return CsvDocument::read_file(root / name);
}

std::vector<ModeDefinition> load_definitions(const fs::path& dir)
{
    std::vector<fs::path> files;
    if (!fs::is_directory(dir)) {
        throw IoError("missing directory '{}'", dir.string());
    }
    for (const auto& e : fs::directory_iterator(dir)) {
        if (e.is_regular_file() && e.path().extension() == ".mode") {
            files.push_back(e.path());
        }
    }
    std::sort(files.begin(), files.end());
    std::vector<ModeDefinition> out;
    for (const auto& f : files) {
        out.push_back(load_mode_definition(f));
    }
    return out;
}

void require_product(const Dataset& ds, std::string_view id, const std::string& context)
{
    const Flow* f = ds.db.find_flow(id);
    if (f == nullptr || f->kind == FlowKind::Elementary) {
        throw DanglingReferenceError(context, std::string(id));
    }
}

bool has_network(const Dataset& ds, std::string_view id)
{
    return std::any_of(ds.networks.begin(), ds.networks.end(), [&](const auto& n) { return n.infra_id == id; });
}

bool has_mode(const Dataset& ds, std::string_view id)
{
    return std::any_of(ds.modes.begin(), ds.modes.end(), [&](const auto& m) { return m.id == id; });
}

void validate(Dataset& ds)
{
    for (auto id : kRequiredMixes) {
        if (!ds.mixes.contains(id)) {
            throw IntegrityError("mixes.csv: region '{}' is missing", id);
        }
    }
    for (auto m : {FreightMode::Sea, FreightMode::Road, FreightMode::RailDiesel, FreightMode::RailElectric,
                   FreightMode::Air}) {
        if (!ds.freight.contains(m)) {
            throw IntegrityError("freight.csv: mode '{}' is missing", to_string(m));
        }
    }

    std::set<std::string> infra_ids;
    for (const auto& r : ds.infrastructure) {
        infra_ids.insert(r.infra_id);
    }
    for (const auto& r : ds.infrastructure) {
        for (const auto& l : r.lines) {
            if (text::starts_with(l.flow_id, "infra:")) {
                if (!infra_ids.contains(l.flow_id.substr(6))) {
                    throw DanglingReferenceError(fmt::format("infrastructure '{}'", r.infra_id), l.flow_id);
                }
                continue;
            }
            require_product(ds, l.flow_id, fmt::format("infrastructure '{}'", r.infra_id));
        }
    }
    for (const auto& n : ds.networks) {
        if (n.infra_id != "station" && !infra_ids.contains(n.infra_id)) {
            throw DanglingReferenceError("networks.csv", n.infra_id);
        }
        traffic_total(ds.traffic, n.traffic);
    }

    for (const auto& h : ds.hbefa) {
        if (ds.db.find_flow(h.flow_id) == nullptr) {
            throw DanglingReferenceError("hbefa.csv", h.flow_id);
        }
    }

    std::set<std::string> sv_ids;
    for (const auto& sv : ds.service_vehicles) {
        if (!sv_ids.insert(sv.vehicle_id).second) {
            throw IntegrityError("duplicate service vehicle '{}'", sv.vehicle_id);
        }
    }
    auto check_def = [&](const ModeDefinition& d, const std::string& name) {
        if (!d.lci.empty()) {
            require_product(ds, d.lci, name + " lci");
        }
        for (const auto& f : d.fleet) {
            require_product(ds, f.product, name + " fleet");
        }
        if (d.lci.empty() && d.fleet.empty()) {
            throw IntegrityError("{}: needs an lci product or a fleet", name);
        }
        if (d.carrier == EnergyCarrier::Electricity && !ds.mixes.contains(d.mix)) {
            throw DanglingReferenceError(name + " mix", d.mix);
        }
        if (!d.fuel_product.empty()) {
            require_product(ds, d.fuel_product, name + " fuel");
        }
        if (!d.service_vehicle.empty() && !sv_ids.contains(d.service_vehicle)) {
            throw DanglingReferenceError(name + " servicing", d.service_vehicle);
        }
        for (const auto& link : d.infrastructure) {
            if (!has_network(ds, link)) {
                throw DanglingReferenceError(name + " infrastructure", link);
            }
        }
    };
    std::set<std::string> mode_ids;
    for (const auto& m : ds.modes) {
        if (!mode_ids.insert(m.id).second) {
            throw IntegrityError("duplicate mode '{}'", m.id);
        }
        check_def(m, "mode '" + m.id + "'");
    }
    for (const auto& sv : ds.service_vehicles) {
        check_def(sv, "service vehicle '" + sv.vehicle_id + "'");
    }

    for (const auto& mode : ds.calibrated.modes()) {
        if (!has_mode(ds, mode)) {
            throw DanglingReferenceError("calibrated_components.csv", mode);
        }
    }
    for (const auto* table : {&ds.lifespans, &ds.servicing_levels}) {
        for (const auto& l : *table) {
            if (!has_mode(ds, l.mode)) {
                throw DanglingReferenceError("scenario levels", l.mode);
            }
            if (!l.service_vehicle.empty() && !sv_ids.contains(l.service_vehicle)) {
                throw DanglingReferenceError("scenarios_servicing.csv", l.service_vehicle);
            }
        }
    }
    for (const auto& l : ds.lifespans) {
        if (!(l.value > 0.0)) {
            throw IntegrityError("lifespan level {}/{} must be positive", l.mode, l.level);
        }
    }

    for (const auto* t : {&ds.survey_age, &ds.survey_usage}) {
        const double s = t->percent_sum();
        if (std::abs(s - 100.0) > 5.0) {
            ds.warnings.push_back(fmt::format("survey percentages sum to {}", s));
        }
    }
}

} // namespace

fs::path default_data_root()
{
    if (const char* env = std::getenv("MODAL_LCA_DATA"); env != nullptr && *env != '\0') {
        return fs::path(env);
    }
    return fs::path(MLCA_DATA_DIR);
}

Dataset load_dataset(const fs::path& root)
{
    if (!fs::is_directory(root)) {
        throw IoError("data directory '{}' does not exist", root.string());
    }
    Dataset ds;
    ds.root = root;
    ds.flows = parse_flows(doc(root, "flows.csv"));
    ds.background = parse_processes(doc(root, "processes.csv"));
    ds.foreground = parse_processes(doc(root, "vehicle_lcis.csv"));
    {
        auto all = ds.background;
        all.insert(all.end(), ds.foreground.begin(), ds.foreground.end());
        ds.db = BackgroundDatabase(ds.flows, std::move(all));
    }
    ds.cf = parse_method(doc(root, "cfs.csv"), ds.flows);
    ds.mixes = parse_mixes(doc(root, "mixes.csv"));
    ds.freight = parse_freight(doc(root, "freight.csv"));
    ds.traffic = parse_traffic(doc(root, "traffic.csv"));
    ds.infrastructure = parse_infrastructure(doc(root, "infrastructure.csv"));
    ds.networks = parse_networks(doc(root, "networks.csv"));
    ds.hbefa = parse_hbefa(doc(root, "hbefa.csv"));
    ds.survey_age = parse_survey(doc(root, "survey_age.csv"));
    ds.survey_usage = parse_survey(doc(root, "survey_usage.csv"));
    ds.calibrated = parse_calibrated(doc(root, "calibrated_components.csv"));
    ds.lifespans = parse_levels(doc(root, "scenarios_lifespan.csv"), "lifetime_km");
    ds.servicing_levels = parse_levels(doc(root, "scenarios_servicing.csv"), "distance_m_per_vkt");
    ds.routes = parse_routes(doc(root, "scenarios_shipping.csv"));
    ds.references = parse_references(doc(root, "references.csv"));
    ds.parameters = parse_parameters(doc(root, "parameters.csv"));
    ds.modes = load_definitions(root / "modes");
    ds.service_vehicles = load_definitions(root / "service_vehicles");
    validate(ds);
    return ds;
}

TailpipeCorrection motorcycle_tailpipe(const Dataset& ds)
{
    const auto& p = ds.parameters;
    return correct_tailpipe(ds.hbefa, {p.get("moped_urban_l_per_100km"), p.get("motorcycle_urban_l_per_100km")},
                            {p.get("moped_weight"), p.get("motorcycle_weight")}, p.get("hbefa_baseline_l_per_100km"));
}

StationEnergy station_energy(const Dataset& ds)
{
    const auto& p = ds.parameters;
    return prorate_station_energy(p.get("station_base_kwh"), p.get("station_base_docks"),
                                  p.get("station_docks_total"), p.get("station_count"));
}

InfrastructureLci station_lci(const Dataset& ds)
{
    const auto& p = ds.parameters;
    const double stations = p.get("station_count");
    const double life = p.get("station_lifetime_yr");
    if (!(stations > 0.0) || !(life > 0.0)) {
        throw DomainError("station count and lifetime must be positive");
    }
    InfrastructureLci lci;
    lci.infra_id = "station";
    lci.functional_unit = "1 station/year";
    lci.lines.push_back({"e_kiosk", 1.0 / life, "item"});
    lci.lines.push_back({"bike_dock", p.get("station_docks_total") / stations / life, "item"});
    lci.lines.push_back({"electricity_lv_fr", station_energy(ds).per_station_kwh, "kWh"});
    lci.lines.push_back({"infra:sidewalk", p.get("station_area_m2") / stations, "m2"});
    return lci;
}

std::string_view to_string(DataPath p)
{
    return p == DataPath::Calibrated ? "calibrated" : "full";
}

std::optional<DataPath> parse_data_path(std::string_view text)
{
    if (text == "calibrated") {
        return DataPath::Calibrated;
    }
    if (text == "full") {
        return DataPath::Full;
    }
    return std::nullopt;
}

const ModeBundle& Model::bundle(std::string_view mode_id) const
{
    for (const auto& b : bundles) {
        if (b.mode.mode_id == mode_id) {
            return b;
        }
    }
    throw ConfigurationError("unknown mode '{}'", mode_id);
}

std::vector<std::string> Model::mode_ids() const
{
    std::vector<std::string> out;
    for (const auto& b : bundles) {
        out.push_back(b.mode.mode_id);
    }
    return out;
}

} // namespace mlca
