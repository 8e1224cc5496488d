#include "mlca/errors.hpp"
#include "mlca/registry.hpp"
#include "mlca/text.hpp"
#include "mlca/units.hpp"

#include <algorithm>

namespace mlca {

namespace {

const InfrastructureLci& find_lci(const std::vector<InfrastructureLci>& all, std::string_view id)
{
    auto it = std::find_if(all.begin(), all.end(), [&](const auto& r) { return r.infra_id == id; });
    if (it == all.end()) {
        throw DanglingReferenceError("infrastructure", std::string(id));
    }
    return *it;
}

ImpactVector annual_unit_impact(const Dataset& ds, const InfrastructureLci& lci, int depth = 0)
{
    if (depth > 8) {
        throw IntegrityError("infrastructure '{}' includes itself", lci.infra_id);
    }
    Demand demand;
    ImpactVector nested;
    for (const auto& line : lci.lines) {
        if (text::starts_with(line.flow_id, "infra:")) {
            const auto& inner = find_lci(ds.infrastructure, line.flow_id.substr(6));
            nested += line.amount * annual_unit_impact(ds, inner, depth + 1);
            continue;
        }
        const Flow* f = ds.db.find_flow(line.flow_id);
        if (f == nullptr) {
            throw DanglingReferenceError(fmt::format("infrastructure '{}'", lci.infra_id), line.flow_id);
        }
        const double amount = line.unit.empty() ? line.amount : units::convert(line.amount, line.unit, f->unit);
        demand[line.flow_id] += amount;
    }
    return lifecycle_impact(ds.db, ds.cf, demand) + nested;
}

std::map<std::string, double, std::less<>> parse_tailpipe_list(std::string_view text, const std::string& owner)
{
    std::map<std::string, double, std::less<>> out;
    for (const auto& item : text::split(text, ',')) {
        auto parts = text::split(item, ':');
        if (parts.size() != 2) {
            throw ConfigurationError("{}: tailpipe entries are flow:g_per_vkt", owner);
        }
        out[parts[0]] += text::to_double(parts[1]);
    }
    return out;
}

UseStage physical_use(const Dataset& ds, const ModeDefinition& def, const std::string& owner)
{
    UseStage use;
    use.carrier = def.carrier;
    use.consumption = def.consumption;
    use.mix_id = def.mix;
    use.fuel_product = def.fuel_product;
    if (def.tailpipe == "hbefa") {
        const auto corr = motorcycle_tailpipe(ds);
        for (const auto& row : corr.rows) {
            const Flow* f = ds.db.find_flow(row.flow_id);
            if (f->kind == FlowKind::Elementary) {
                use.tailpipe_g_per_vkt[row.flow_id] += row.g_per_vkt;
            } else if (row.flow_id == def.fuel_product && def.consumption == 0.0) {
                use.consumption += row.g_per_vkt * 1e-3;
            }
        }
    } else if (!def.tailpipe.empty()) {
        use.tailpipe_g_per_vkt = parse_tailpipe_list(def.tailpipe, owner);
        for (const auto& [flow, g] : use.tailpipe_g_per_vkt) {
            const Flow* f = ds.db.find_flow(flow);
            if (f == nullptr || f->kind != FlowKind::Elementary) {
                throw DanglingReferenceError(owner + " tailpipe", flow);
            }
        }
    }
    return use;
}

VehicleComponent physical_vehicle(const Dataset& ds, const ModeDefinition& def)
{
    VehicleComponent v;
    v.vehicle_id = def.vehicle_id;
    v.mass_kg = def.mass_kg;
    v.lifetime_km = def.lifetime_km;
    if (!def.fleet.empty()) {
        for (const auto& f : def.fleet) {
            v.fleet.push_back(FleetVariant{f.variant, f.share, lifecycle_impact(ds.db, ds.cf, {{f.product, 1.0}})});
        }
    } else {
        v.lifecycle_impact = lifecycle_impact(ds.db, ds.cf, {{def.lci, 1.0}});
    }
    return v;
}

void calibrate(ModeBundle& b, const CalibratedComponentTable& table, const ImpactContext& ctx)
{
    auto& mode = b.mode;
    const double occ = mode.occupancy;
    const double dist_km = mode.servicing.distance_m_per_vkt / 1000.0;
    const bool serviced = mode.servicing.applicable && dist_km > 0.0 && mode.servicing.service_vehicle;

    UseStage bare_use = mode.use;
    bare_use.calibration_offset = {};
    const ImpactVector phys_use = use_stage_impact(bare_use, ctx);
    ImpactVector phys_sv_use;
    if (serviced) {
        auto sv_use = mode.servicing.service_vehicle->use;
        sv_use.calibration_offset = {};
        phys_sv_use = use_stage_impact(sv_use, ctx);
    }

    ImpactVector vehicle_life;
    ImpactVector use_offset;
    ImpactVector sv_life;
    std::map<std::string, ImpactVector, std::less<>> infra_unit;

    for (auto ind : kAllIndicators) {
        const auto* entry = table.find(mode.mode_id, ind);
        if (entry == nullptr) {
            throw ConfigurationError("calibrated table has no {} entry for '{}'", to_string(ind), mode.mode_id);
        }
        for (const auto& [name, value] : entry->components()) {
            if (name == "vehicle") {
                vehicle_life[ind] = value * mode.vehicle.lifetime_km * occ;
            } else if (name == "use") {
                use_offset[ind] = value * occ - phys_use[ind];
            } else if (name == "servicing") {
                if (!serviced) {
                    throw ConfigurationError("'{}' has a servicing share but no servicing", mode.mode_id);
                }
                const double per_km = value * occ / dist_km;
                sv_life[ind] = (per_km - phys_sv_use[ind]) * mode.servicing.service_vehicle->vehicle.lifetime_km;
            } else if (auto it = b.assets.find(name); it != b.assets.end()) {
                const auto& asset = it->second;
                infra_unit[name][ind] = value * occ / (allocation_factor(asset) * asset.quantity);
            } else {
                throw ConfigurationError("'{}': calibrated component '{}' is not part of the mode", mode.mode_id,
                                         name);
            }
        }
    }

    mode.vehicle.fleet.clear();
    mode.vehicle.lifecycle_impact = vehicle_life;
    mode.use.calibration_offset = use_offset;
    if (serviced) {
        auto& sv = *mode.servicing.service_vehicle;
        sv.vehicle.fleet.clear();
        sv.vehicle.lifecycle_impact = sv_life;
        sv.use.calibration_offset = {};
    }
    for (auto& [id, asset] : b.assets) {
        asset.annual_impact_per_unit = infra_unit[id];
    }
}

} // namespace

Model build_model(const Dataset& ds, DataPath path)
{
    Model m;
    m.path = path;
    m.context.mixes = ds.mixes;
    m.context.cf = ds.cf;

    auto add_fuel = [&](const ModeDefinition& d) {
        if (!d.fuel_product.empty() && !m.context.product_impacts.contains(d.fuel_product)) {
            m.context.product_impacts[d.fuel_product] = lifecycle_impact(ds.db, ds.cf, {{d.fuel_product, 1.0}});
        }
    };
    for (const auto& d : ds.modes) {
        add_fuel(d);
    }
    for (const auto& d : ds.service_vehicles) {
        add_fuel(d);
    }

    for (const auto& d : ds.service_vehicles) {
        m.service_vehicles[d.vehicle_id] =
            ServiceVehicle{d.vehicle_id, physical_vehicle(ds, d), physical_use(ds, d, d.vehicle_id)};
    }

    AssetRegistry paris;
    for (const auto& n : ds.networks) {
        InfrastructureAsset a;
        a.infra_id = n.infra_id;
        a.quantity = n.quantity;
        a.unit = n.unit;
        a.annual_vkt = traffic_total(ds.traffic, n.traffic);
        a.annual_impact_per_unit = n.infra_id == "station" ? annual_unit_impact(ds, station_lci(ds))
                                                           : annual_unit_impact(ds, find_lci(ds.infrastructure, n.infra_id));
        paris.emplace(a.infra_id, std::move(a));
    }

    for (const auto& d : ds.modes) {
        ModeBundle b;
        auto& t = b.mode;
        t.mode_id = d.id;
        t.label = d.label.empty() ? d.id : d.label;
        t.ownership = d.ownership;
        t.occupancy = d.occupancy;
        t.vehicle = physical_vehicle(ds, d);
        t.use = physical_use(ds, d, d.id);
        t.servicing.applicable = d.ownership == Ownership::Shared;
        t.servicing.distance_m_per_vkt = d.servicing_m_per_vkt;
        if (!d.service_vehicle.empty()) {
            t.servicing.service_vehicle = m.service_vehicles.at(d.service_vehicle);
        }
        t.infrastructure_links = d.infrastructure;
        for (const auto& link : d.infrastructure) {
            b.assets.emplace(link, paris.at(link));
        }
        if (path == DataPath::Calibrated) {
            calibrate(b, ds.calibrated, m.context);
        }
        m.bundles.push_back(std::move(b));
    }
    return m;
}

} // namespace mlca
