#pragma once

#include "mlca/registry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mlca {

enum class Axis
{
    Lifespan,
    Servicing,
    Shipping,
    Electricity,
};

std::string_view to_string(Axis a);
std::optional<Axis> parse_axis(std::string_view text);

struct ScenarioSpec
{
    Axis axis = Axis::Lifespan;
    std::string level;           // worst/pessimistic/base/optimistic, route id or mix id
    double value = 0.0;          // km (lifespan) or m/vkt (servicing)
    std::string service_vehicle; // servicing only; empty keeps the mode's own

    std::string label() const; // "<axis>:<level>"
    bool operator==(const ScenarioSpec&) const = default;
};

// What the axes need besides the mode.
struct ScenarioContext
{
    FreightTable freight;
    std::vector<ShippingRoute> routes;
    std::map<std::string, ServiceVehicle, std::less<>> service_vehicles;
    std::vector<std::string> mix_ids;
    std::vector<ScenarioLevel> lifespans;
    std::vector<ScenarioLevel> servicing_levels;
};

ScenarioContext make_scenario_context(const Dataset& ds, const Model& model);

// Named levels of one axis for one mode, in file order. Electricity uses every mix.
std::vector<ScenarioSpec> levels_for(const ScenarioContext& ctx, Axis axis, std::string_view mode_id);

// Throws InvalidScenarioError for a level outside the axis domain or a servicing level on a private mode.
TransportMode apply_scenario(const TransportMode& mode, const ScenarioSpec& spec, const ScenarioContext& ctx);

// Shipping burden of one vehicle over a route.
ImpactVector shipping_impact(double mass_kg, const ShippingRoute& route, const FreightTable& freight);

// One result per spec, in input order; each result carries its spec label.
std::vector<AssessmentResult> sweep(const ModeBundle& bundle, const std::vector<ScenarioSpec>& specs,
                                    const ScenarioContext& sctx, const ImpactContext& ictx);

struct BreakevenResult
{
    bool attainable = false;
    double mileage_km = 0.0;
    double target = 0.0;
    double vehicle_lifecycle_per_pkt_km = 0.0; // per-vehicle impact / occupancy
    double fixed_per_pkt = 0.0;                // use + servicing + infrastructure
    AssessmentResult base;
};

// L* = vehicle lifecycle / (target - fixed terms). Unattainable targets are reported, not thrown.
BreakevenResult breakeven_mileage(const ModeBundle& bundle, Indicator ind, double target, const ImpactContext& ictx);

double lifespan_asymptote(const ModeBundle& bundle, Indicator ind, double lifetime_km, const ImpactContext& ictx);

} // namespace mlca
