#include "mlca/derivations.hpp"
#include "mlca/errors.hpp"

#include <cmath>

namespace mlca {

double shared_fleet_lifetime(double annual_km, double lifespan_months)
{
    if (!(annual_km > 0.0) || !(lifespan_months > 0.0)) {
        throw DomainError("fleet lifetime needs positive mileage and lifespan");
    }
    return annual_km * lifespan_months / 12.0;
}

PrivateBikeLifetime derive_private_bike_lifetime(const SurveyTable& age, const SurveyTable& usage,
                                                 std::string_view age_column, std::string_view km_column)
{
    if (age.rows.empty() || usage.rows.empty()) {
        throw DomainError("survey tables must not be empty");
    }
    PrivateBikeLifetime out;
    const auto ca = age.column(age_column);
    const auto ck = usage.column(km_column);
    for (const auto& r : age.rows) {
        out.mean_age_years += r.percent / 100.0 * r.values[ca];
    }
    for (const auto& r : usage.rows) {
        out.annual_km += r.percent / 100.0 * r.values[ck];
    }
    for (const auto* t : {&age, &usage}) {
        const double s = t->percent_sum();
        if (std::fabs(s - 100.0) > 5.0) {
            out.warnings.push_back(fmt::format("survey percentages sum to {}", s));
        }
    }
    out.lifespan_years = 2.0 * out.mean_age_years;
    out.lifetime_km = out.lifespan_years * out.annual_km;
    out.lifetime_km_rounded = std::round(out.lifespan_years * 10.0) / 10.0 * std::round(out.annual_km);
    return out;
}

StationEnergy prorate_station_energy(double base_kwh, double base_docks, double total_docks, double stations)
{
    if (!(stations > 0.0)) {
        throw DomainError("station count must be positive");
    }
    if (!(base_docks > 0.0) || base_kwh < 0.0 || total_docks < 0.0) {
        throw DomainError("station proration needs positive reference docks and nonnegative inputs");
    }
    StationEnergy e;
    e.per_station_kwh = base_kwh * (total_docks / stations) / base_docks;
    e.network_kwh = e.per_station_kwh * stations;
    return e;
}

double derive_servicing_distance(double vans, double km_per_day_per_van, double vehicles, double km_per_year)
{
    const double denom = vehicles * km_per_year;
    if (!(denom > 0.0)) {
        throw DomainError("servicing derivation needs positive fleet size and mileage");
    }
    return vans * km_per_day_per_van * 365.0 / denom * 1000.0;
}

double derive_pickup_servicing(double route_km, double vehicles, double km_between_pickups)
{
    const double denom = vehicles * km_between_pickups;
    if (!(denom > 0.0) || route_km < 0.0) {
        throw DomainError("pickup servicing needs positive vehicles and pickup distance");
    }
    return route_km / denom * 1000.0;
}

TailpipeCorrection correct_tailpipe(const std::vector<HbefaRow>& rows, const std::vector<double>& urban_l_per_100km,
                                    const std::vector<double>& weights, double baseline_l_per_100km)
{
    if (!(baseline_l_per_100km > 0.0)) {
        throw DomainError("baseline consumption must be positive");
    }
    if (urban_l_per_100km.size() != weights.size() || weights.empty()) {
        throw DomainError("one weight per urban consumption figure is required");
    }
    double num = 0.0;
    double wsum = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        num += weights[i] * urban_l_per_100km[i];
        wsum += weights[i];
    }
    if (!(wsum > 0.0)) {
        throw DomainError("weights must sum to a positive value");
    }
    TailpipeCorrection c;
    c.ratio = num / wsum / baseline_l_per_100km;
    for (auto r : rows) {
        r.g_per_vkt *= c.ratio;
        c.g_per_vkt[r.flow_id] += r.g_per_vkt;
        c.rows.push_back(std::move(r));
    }
    return c;
}

} // namespace mlca
