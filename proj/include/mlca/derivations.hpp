#pragma once

#include "mlca/dataset.hpp"

#include <map>
#include <string>
#include <vector>

namespace mlca {

// annual_km x lifespan_months / 12
double shared_fleet_lifetime(double annual_km, double lifespan_months);

struct PrivateBikeLifetime
{
    double mean_age_years = 0.0;
    double lifespan_years = 0.0; // twice the mean age
    double annual_km = 0.0;
    double lifetime_km = 0.0;         // unrounded product
    double lifetime_km_rounded = 0.0; // (lifespan rounded to 0.1 yr) x (annual km rounded to 1 km)
    std::vector<std::string> warnings;
};

// Age column and mileage column are picked by name.
PrivateBikeLifetime derive_private_bike_lifetime(const SurveyTable& age, const SurveyTable& usage,
                                                 std::string_view age_column = "lifetime_years",
                                                 std::string_view km_column = "annual_km");

struct StationEnergy
{
    double per_station_kwh = 0.0;
    double network_kwh = 0.0;
};

StationEnergy prorate_station_energy(double base_kwh, double base_docks, double total_docks, double stations);

// vans x km/day x 365 / (vehicles x km/yr), in metres per vkt.
double derive_servicing_distance(double vans, double km_per_day_per_van, double vehicles, double km_per_year);

// One route of route_km collects `vehicles` that each rode km_between_pickups; metres per vkt.
double derive_pickup_servicing(double route_km, double vehicles, double km_between_pickups);

struct TailpipeCorrection
{
    double ratio = 0.0;
    std::map<std::string, double, std::less<>> g_per_vkt; // by flow id, categories summed
    std::vector<HbefaRow> rows;                            // every row multiplied by the ratio
};

// ratio = sum(w_i c_i) / (sum(w_i) x baseline)
TailpipeCorrection correct_tailpipe(const std::vector<HbefaRow>& rows, const std::vector<double>& urban_l_per_100km,
                                    const std::vector<double>& weights, double baseline_l_per_100km);

} // namespace mlca
