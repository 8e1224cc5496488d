#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace mlca::units {

enum class Dimension
{
    Mass,
    Energy,
    Transport,
    Count,
    Length,
    Area,
    Volume,
};

struct UnitInfo
{
    std::string_view canonical;
    Dimension dimension;
    double to_canonical; // multiply an amount in this unit to get the canonical amount
};

// Known spellings: kg g t mg, MJ GJ kJ, kWh MWh Wh GWh, tkm t*km kgkm kg*km,
// item items item(s) unit p, m km cm, m2 ha km2, m3 L l.
std::optional<UnitInfo> lookup(std::string_view unit);

bool is_canonical(std::string_view unit);

// Throws DataError for unknown units.
std::string canonical_unit(std::string_view unit);

// Factor k such that amount[from] * k == amount[to]. kWh and MJ convert at 3.6.
// Throws DataError when the dimensions differ or a unit is unknown.
double conversion_factor(std::string_view from, std::string_view to);

inline double convert(double amount, std::string_view from, std::string_view to)
{
    return amount * conversion_factor(from, to);
}

} // namespace mlca::units
