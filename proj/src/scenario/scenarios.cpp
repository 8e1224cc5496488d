#include "mlca/scenarios.hpp"
#include "mlca/errors.hpp"

#include <algorithm>
#include <cmath>

namespace mlca {

std::string_view to_string(Axis a)
{
    switch (a) {
    case Axis::Lifespan:
        return "lifespan";
    case Axis::Servicing:
        return "servicing";
    case Axis::Shipping:
        return "shipping";
    case Axis::Electricity:
        return "electricity";
    }
    return "?";
}

std::optional<Axis> parse_axis(std::string_view text)
{
    for (auto a : {Axis::Lifespan, Axis::Servicing, Axis::Shipping, Axis::Electricity}) {
        if (to_string(a) == text) {
            return a;
        }
    }
    if (text == "mix") {
        return Axis::Electricity;
    }
    return std::nullopt;
}

std::string ScenarioSpec::label() const
{
    return fmt::format("{}:{}", to_string(axis), level);
}

ScenarioContext make_scenario_context(const Dataset& ds, const Model& model)
{
    ScenarioContext c;
    c.freight = ds.freight;
    c.routes = ds.routes;
    c.service_vehicles = model.service_vehicles;
    for (const auto& [id, mix] : model.context.mixes) {
        c.mix_ids.push_back(id);
    }
    c.lifespans = ds.lifespans;
    c.servicing_levels = ds.servicing_levels;
    return c;
}

std::vector<ScenarioSpec> levels_for(const ScenarioContext& ctx, Axis axis, std::string_view mode_id)
{
    std::vector<ScenarioSpec> out;
    switch (axis) {
    case Axis::Lifespan:
    case Axis::Servicing:
        for (const auto& l : axis == Axis::Lifespan ? ctx.lifespans : ctx.servicing_levels) {
            if (l.mode == mode_id) {
                out.push_back({axis, l.level, l.value, l.service_vehicle});
            }
        }
        break;
    case Axis::Shipping:
        for (const auto& r : ctx.routes) {
            out.push_back({axis, r.route_id, 0.0, {}});
        }
        break;
    case Axis::Electricity:
        for (const auto& id : ctx.mix_ids) {
            out.push_back({axis, id, 0.0, {}});
        }
        break;
    }
    return out;
}

ImpactVector shipping_impact(double mass_kg, const ShippingRoute& route, const FreightTable& freight)
{
    ImpactVector per_t;
    for (const auto& leg : route.legs) {
        auto it = freight.find(leg.mode);
        if (it == freight.end()) {
            throw InvalidScenarioError("route {}: no freight factor for {}", route.route_id, to_string(leg.mode));
        }
        per_t += leg.distance_km * it->second.per_tkm;
    }
    return mass_kg / 1000.0 * per_t;
}

TransportMode apply_scenario(const TransportMode& mode, const ScenarioSpec& spec, const ScenarioContext& ctx)
{
    TransportMode out = mode;
    switch (spec.axis) {
    case Axis::Lifespan:
        if (!(spec.value > 0.0) || !std::isfinite(spec.value)) {
            throw InvalidScenarioError("{}: lifespan must be a positive distance", spec.label());
        }
        out.vehicle.lifetime_km = spec.value;
        break;

    case Axis::Servicing:
        if (mode.ownership != Ownership::Shared) {
            throw InvalidScenarioError("{}: '{}' is privately owned and has no servicing", spec.label(),
                                       mode.mode_id);
        }
        if (spec.value < 0.0 || !std::isfinite(spec.value)) {
            throw InvalidScenarioError("{}: servicing distance must be nonnegative", spec.label());
        }
        out.servicing.distance_m_per_vkt = spec.value;
        if (!spec.service_vehicle.empty()) {
            auto it = ctx.service_vehicles.find(spec.service_vehicle);
            if (it == ctx.service_vehicles.end()) {
                throw InvalidScenarioError("{}: unknown service vehicle '{}'", spec.label(), spec.service_vehicle);
            }
            out.servicing.service_vehicle = it->second;
        }
        break;

    case Axis::Shipping: {
        auto it = std::find_if(ctx.routes.begin(), ctx.routes.end(),
                               [&](const auto& r) { return r.route_id == spec.level; });
        if (it == ctx.routes.end()) {
            throw InvalidScenarioError("unknown shipping route '{}'", spec.level);
        }
        const auto add = shipping_impact(mode.vehicle.mass_kg, *it, ctx.freight);
        if (out.vehicle.fleet.empty()) {
            out.vehicle.lifecycle_impact += add;
        } else {
            for (auto& v : out.vehicle.fleet) {
                v.lifecycle_impact += add;
            }
        }
        break;
    }

    case Axis::Electricity:
        if (std::find(ctx.mix_ids.begin(), ctx.mix_ids.end(), spec.level) == ctx.mix_ids.end()) {
            throw InvalidScenarioError("unknown electricity mix '{}'", spec.level);
        }
        if (out.use.carrier == EnergyCarrier::Electricity) {
            out.use.mix_id = spec.level;
        }
        if (out.servicing.service_vehicle && out.servicing.service_vehicle->use.carrier == EnergyCarrier::Electricity) {
            out.servicing.service_vehicle->use.mix_id = spec.level;
        }
        break;
    }
    return out;
}

std::vector<AssessmentResult> sweep(const ModeBundle& bundle, const std::vector<ScenarioSpec>& specs,
                                    const ScenarioContext& sctx, const ImpactContext& ictx)
{
    if (specs.empty()) {
        throw InvalidScenarioError("sweep over '{}' needs at least one level", bundle.mode.mode_id);
    }
    std::vector<AssessmentResult> out;
    out.reserve(specs.size());
    for (const auto& s : specs) {
        auto r = modal_impact(apply_scenario(bundle.mode, s, sctx), bundle.assets, ictx);
        r.scenario = s.label();
        out.push_back(std::move(r));
    }
    return out;
}

BreakevenResult breakeven_mileage(const ModeBundle& bundle, Indicator ind, double target, const ImpactContext& ictx)
{
    BreakevenResult b;
    b.target = target;
    b.base = modal_impact(bundle.mode, bundle.assets, ictx);
    b.vehicle_lifecycle_per_pkt_km = bundle.mode.vehicle.per_vehicle_impact()[ind] / bundle.mode.occupancy;
    if (!(b.vehicle_lifecycle_per_pkt_km > 0.0)) {
        throw DomainError("'{}': break-even needs a positive vehicle impact on {}", bundle.mode.mode_id,
                          to_string(ind));
    }
    b.fixed_per_pkt = b.base.total[ind] - b.base.vehicle[ind];
    if (target > b.fixed_per_pkt) {
        b.attainable = true;
        b.mileage_km = b.vehicle_lifecycle_per_pkt_km / (target - b.fixed_per_pkt);
    }
    return b;
}

double lifespan_asymptote(const ModeBundle& bundle, Indicator ind, double lifetime_km, const ImpactContext& ictx)
{
    if (!(lifetime_km > 0.0)) {
        throw DomainError("lifespan must be positive");
    }
    auto mode = bundle.mode;
    mode.vehicle.lifetime_km = lifetime_km;
    return modal_impact(mode, bundle.assets, ictx).total[ind];
}

} // namespace mlca
