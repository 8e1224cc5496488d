#include "mlca/mode_model.hpp"
#include "mlca/errors.hpp"
#include "mlca/text.hpp"

#include <cmath>

namespace mlca {

std::string_view to_string(Ownership o)
{
    return o == Ownership::Shared ? "shared" : "private";
}

std::optional<Ownership> parse_ownership(std::string_view text)
{
    auto t = text::lower(text::trim(text));
    if (t == "shared") {
        return Ownership::Shared;
    }
    if (t == "private" || t == "personal") {
        return Ownership::Private;
    }
    return std::nullopt;
}

std::string_view to_string(EnergyCarrier c)
{
    switch (c) {
    case EnergyCarrier::None: return "none";
    case EnergyCarrier::Electricity: return "electricity";
    case EnergyCarrier::Gasoline: return "gasoline";
    case EnergyCarrier::Diesel: return "diesel";
    }
    return "none";
}

std::optional<EnergyCarrier> parse_carrier(std::string_view text)
{
    auto t = text::lower(text::trim(text));
    if (t == "none" || t.empty()) {
        return EnergyCarrier::None;
    }
    if (t == "electricity") {
        return EnergyCarrier::Electricity;
    }
    if (t == "gasoline" || t == "petrol") {
        return EnergyCarrier::Gasoline;
    }
    if (t == "diesel") {
        return EnergyCarrier::Diesel;
    }
    return std::nullopt;
}

ImpactVector VehicleComponent::per_vehicle_impact() const
{
    if (fleet.empty()) {
        return lifecycle_impact;
    }
    ImpactVector out;
    for (const auto& v : fleet) {
        out += v.share * v.lifecycle_impact;
    }
    return out;
}

std::vector<ComponentImpact> AssessmentResult::components() const
{
    std::vector<ComponentImpact> out{{"vehicle", vehicle}, {"use", use}, {"servicing", servicing}};
    out.insert(out.end(), infrastructure.begin(), infrastructure.end());
    return out;
}

double allocation_factor(const InfrastructureAsset& asset)
{
    if (asset.allocation_override) {
        return *asset.allocation_override;
    }
    if (!(asset.annual_vkt > 0.0)) {
        throw DomainError("infrastructure '{}': annual traffic must be positive (got {})", asset.infra_id,
                          asset.annual_vkt);
    }
    return 1.0 / asset.annual_vkt;
}

ImpactVector vehicle_amortization(const VehicleComponent& vc, double occupancy)
{
    if (!(vc.lifetime_km > 0.0)) {
        throw DomainError("vehicle '{}': lifetime mileage must be positive (got {})", vc.vehicle_id, vc.lifetime_km);
    }
    if (!(occupancy > 0.0)) {
        throw DomainError("vehicle '{}': occupancy must be positive", vc.vehicle_id);
    }
    return vc.per_vehicle_impact() / (vc.lifetime_km * occupancy);
}

ImpactVector use_stage_impact(const UseStage& use, const ImpactContext& ctx)
{
    ImpactVector out;
    switch (use.carrier) {
    case EnergyCarrier::None:
        break;
    case EnergyCarrier::Electricity: {
        auto it = ctx.mixes.find(use.mix_id);
        if (it == ctx.mixes.end()) {
            throw ConfigurationError("unknown electricity mix '{}'", use.mix_id);
        }
        out = use.consumption * it->second.per_kwh;
        break;
    }
    case EnergyCarrier::Gasoline:
    case EnergyCarrier::Diesel: {
        for (const auto& [flow, grams] : use.tailpipe_g_per_vkt) {
            for (auto ind : kAllIndicators) {
                if (auto f = ctx.cf.factor(flow, ind)) {
                    out[ind] += grams * 1e-3 * *f;
                }
            }
        }
        if (use.consumption != 0.0) {
            auto it = ctx.product_impacts.find(use.fuel_product);
            if (it == ctx.product_impacts.end()) {
                throw ConfigurationError("no upstream impact for fuel product '{}'", use.fuel_product);
            }
            out += use.consumption * it->second;
        }
        break;
    }
    }
    return out + use.calibration_offset;
}

ImpactVector servicing_impact(const ServicingSpec& spec, const ImpactContext& ctx, std::string* notice)
{
    if (!spec.applicable) {
        if (notice != nullptr) {
            *notice = "servicing not applicable";
        }
        return {};
    }
    if (spec.distance_m_per_vkt == 0.0) {
        return {};
    }
    if (!spec.service_vehicle) {
        throw ConfigurationError("servicing distance set but no service vehicle");
    }
    const auto& sv = *spec.service_vehicle;
    const ImpactVector per_km = vehicle_amortization(sv.vehicle, 1.0) + use_stage_impact(sv.use, ctx);
    return (spec.distance_m_per_vkt / 1000.0) * per_km;
}

ImpactVector infrastructure_impact(const InfrastructureAsset& asset, double occupancy)
{
    return (allocation_factor(asset) * asset.quantity / occupancy) * asset.annual_impact_per_unit;
}

namespace {

std::vector<std::string> unresolved_references(const TransportMode& mode, const AssetRegistry& assets,
                                               const ImpactContext& ctx)
{
    std::vector<std::string> missing;
    auto check_use = [&](const UseStage& use, std::string_view owner) {
        if (use.carrier == EnergyCarrier::Electricity && !ctx.mixes.contains(use.mix_id)) {
            missing.push_back(fmt::format("{}: electricity mix '{}'", owner, use.mix_id));
        }
        if ((use.carrier == EnergyCarrier::Gasoline || use.carrier == EnergyCarrier::Diesel) &&
            use.consumption != 0.0 && !ctx.product_impacts.contains(use.fuel_product)) {
            missing.push_back(fmt::format("{}: fuel product '{}'", owner, use.fuel_product));
        }
    };
    check_use(mode.use, "use");
    if (mode.servicing.applicable && mode.servicing.distance_m_per_vkt != 0.0) {
        if (!mode.servicing.service_vehicle) {
            missing.push_back("servicing: service vehicle");
        } else {
            check_use(mode.servicing.service_vehicle->use, "servicing");
        }
    }
    for (const auto& link : mode.infrastructure_links) {
        if (!assets.contains(link)) {
            missing.push_back(fmt::format("infrastructure '{}'", link));
        }
    }
    return missing;
}

} // namespace

AssessmentResult modal_impact(const TransportMode& mode, const AssetRegistry& assets, const ImpactContext& ctx)
{
    if (!(mode.occupancy >= 1.0)) {
        throw DomainError("mode '{}': occupancy must be at least 1 (got {})", mode.mode_id, mode.occupancy);
    }
    if (auto missing = unresolved_references(mode, assets, ctx); !missing.empty()) {
        throw AssessmentError("mode '{}' has unresolved references: {}", mode.mode_id, text::join(missing, "; "));
    }

    AssessmentResult r;
    r.mode_id = mode.mode_id;
    r.vehicle = vehicle_amortization(mode.vehicle, mode.occupancy);
    r.use = use_stage_impact(mode.use, ctx) / mode.occupancy;
    std::string notice;
    r.servicing = servicing_impact(mode.servicing, ctx, &notice) / mode.occupancy;
    if (!notice.empty() && mode.ownership == Ownership::Shared) {
        r.notices.push_back(notice);
    }
    for (const auto& link : mode.infrastructure_links) {
        r.infrastructure.push_back({link, infrastructure_impact(assets.find(link)->second, mode.occupancy)});
    }

    r.total = r.vehicle + r.use + r.servicing;
    for (const auto& c : r.infrastructure) {
        r.total += c.impact;
    }
    return r;
}

} // namespace mlca
