#pragma once

#include "mlca/impact.hpp"
#include "mlca/methods.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mlca {

enum class Ownership
{
    Shared,
    Private,
};

enum class EnergyCarrier
{
    None,
    Electricity,
    Gasoline,
    Diesel,
};

std::string_view to_string(Ownership o);
std::optional<Ownership> parse_ownership(std::string_view text);
std::string_view to_string(EnergyCarrier c);
std::optional<EnergyCarrier> parse_carrier(std::string_view text);

struct ElectricityMix
{
    std::string id;
    std::string name;
    ImpactVector per_kwh; // low-voltage delivery

    bool operator==(const ElectricityMix&) const = default;
};

using MixTable = std::map<std::string, ElectricityMix, std::less<>>;

struct FleetVariant
{
    std::string variant;
    double share = 0.0; // kilometre share
    ImpactVector lifecycle_impact;

    bool operator==(const FleetVariant&) const = default;
};

struct VehicleComponent
{
    std::string vehicle_id;
    double mass_kg = 0.0;
    double lifetime_km = 0.0;
    ImpactVector lifecycle_impact; // used when `fleet` is empty
    std::vector<FleetVariant> fleet;

    // Share-weighted over the fleet when present.
    ImpactVector per_vehicle_impact() const;

    bool operator==(const VehicleComponent&) const = default;
};

struct UseStage
{
    EnergyCarrier carrier = EnergyCarrier::None;
    double consumption = 0.0;   // kWh/vkt for electricity, kg fuel/vkt for liquid fuels
    std::string mix_id;         // electricity only
    std::string fuel_product;   // liquid fuels: product whose upstream impact is charged per kg
    std::map<std::string, double, std::less<>> tailpipe_g_per_vkt; // elementary flow id -> g/vkt
    ImpactVector calibration_offset; // per vkt, added as-is (calibrated path)

    bool operator==(const UseStage&) const = default;
};

struct ServiceVehicle
{
    std::string id;
    VehicleComponent vehicle;
    UseStage use;

    bool operator==(const ServiceVehicle&) const = default;
};

struct ServicingSpec
{
    bool applicable = false;
    double distance_m_per_vkt = 0.0;
    std::optional<ServiceVehicle> service_vehicle;

    bool operator==(const ServicingSpec&) const = default;
};

struct InfrastructureAsset
{
    std::string infra_id;
    double quantity = 0.0; // q_j: m2, linear m, or items
    std::string unit;
    ImpactVector annual_impact_per_unit;
    double annual_vkt = 0.0;
    std::optional<double> allocation_override;

    bool operator==(const InfrastructureAsset&) const = default;
};

using AssetRegistry = std::map<std::string, InfrastructureAsset, std::less<>>;

struct TransportMode
{
    std::string mode_id;
    std::string label;
    Ownership ownership = Ownership::Private;
    VehicleComponent vehicle;
    UseStage use;
    ServicingSpec servicing;
    std::vector<std::string> infrastructure_links;
    double occupancy = 1.0;

    bool operator==(const TransportMode&) const = default;
};

// Everything the use and servicing terms need besides the mode itself.
struct ImpactContext
{
    MixTable mixes;
    CharacterizationFactorSet cf;
    std::map<std::string, ImpactVector, std::less<>> product_impacts; // per unit of product (e.g. per kg petrol)
};

struct ComponentImpact
{
    std::string component;
    ImpactVector impact;

    bool operator==(const ComponentImpact&) const = default;
};

struct AssessmentResult
{
    std::string mode_id;
    std::string scenario; // empty for the base case
    ImpactVector vehicle;
    ImpactVector use;
    ImpactVector servicing;
    std::vector<ComponentImpact> infrastructure;
    ImpactVector total;
    std::vector<std::string> notices;

    // vehicle, use, servicing, then each infrastructure asset in link order.
    std::vector<ComponentImpact> components() const;
};

// 1/VKT_j unless overridden. Throws DomainError on zero or negative traffic.
double allocation_factor(const InfrastructureAsset& asset);

// Per pkt. Throws DomainError for nonpositive mileage or occupancy.
ImpactVector vehicle_amortization(const VehicleComponent& vc, double occupancy);

// Per vkt. Throws ConfigurationError for an unknown mix or fuel product.
ImpactVector use_stage_impact(const UseStage& use, const ImpactContext& ctx);

// Per vkt of the served vehicle: (distance/1000) x per-km impact of the service vehicle.
// Returns zero when not applicable and, if given, fills `notice`.
ImpactVector servicing_impact(const ServicingSpec& spec, const ImpactContext& ctx, std::string* notice = nullptr);

// Per pkt share of one asset's annual network impact.
ImpactVector infrastructure_impact(const InfrastructureAsset& asset, double occupancy);

// Throws AssessmentError listing every unresolved reference.
AssessmentResult modal_impact(const TransportMode& mode, const AssetRegistry& assets, const ImpactContext& ctx);

struct ContributionShares
{
    std::string mode_id;
    std::vector<std::string> components;
    // shares[indicator][component]; NaN where the total is zero
    std::array<std::vector<double>, kIndicatorCount> shares;
    std::vector<std::string> notices;
};

ContributionShares contribution_breakdown(const AssessmentResult& result);

} // namespace mlca
