#include "mlca/units.hpp"
#include "mlca/errors.hpp"

#include <array>

namespace mlca::units {

namespace {

struct Alias
{
    std::string_view spelling;
    UnitInfo info;
};

constexpr double kMjPerKwh = 3.6;

constexpr std::array s_aliases{
    Alias{"kg", {"kg", Dimension::Mass, 1.0}},
    Alias{"g", {"kg", Dimension::Mass, 1e-3}},
    Alias{"mg", {"kg", Dimension::Mass, 1e-6}},
    Alias{"t", {"kg", Dimension::Mass, 1e3}},
    Alias{"MJ", {"MJ", Dimension::Energy, 1.0}},
    Alias{"GJ", {"MJ", Dimension::Energy, 1e3}},
    Alias{"kJ", {"MJ", Dimension::Energy, 1e-3}},
    Alias{"kWh", {"kWh", Dimension::Energy, 1.0}},
    Alias{"MWh", {"kWh", Dimension::Energy, 1e3}},
    Alias{"GWh", {"kWh", Dimension::Energy, 1e6}},
    Alias{"Wh", {"kWh", Dimension::Energy, 1e-3}},
    Alias{"tkm", {"tkm", Dimension::Transport, 1.0}},
    Alias{"t*km", {"tkm", Dimension::Transport, 1.0}},
    Alias{"kgkm", {"tkm", Dimension::Transport, 1e-3}},
    Alias{"kg*km", {"tkm", Dimension::Transport, 1e-3}},
    Alias{"item", {"item", Dimension::Count, 1.0}},
    Alias{"items", {"item", Dimension::Count, 1.0}},
    Alias{"item(s)", {"item", Dimension::Count, 1.0}},
    Alias{"Item(s)", {"item", Dimension::Count, 1.0}},
    Alias{"unit", {"item", Dimension::Count, 1.0}},
    Alias{"p", {"item", Dimension::Count, 1.0}},
    Alias{"m", {"m", Dimension::Length, 1.0}},
    Alias{"km", {"m", Dimension::Length, 1e3}},
    Alias{"cm", {"m", Dimension::Length, 1e-2}},
    Alias{"m2", {"m2", Dimension::Area, 1.0}},
    Alias{"ha", {"m2", Dimension::Area, 1e4}},
    Alias{"km2", {"m2", Dimension::Area, 1e6}},
    Alias{"m3", {"m3", Dimension::Volume, 1.0}},
    Alias{"L", {"m3", Dimension::Volume, 1e-3}},
    Alias{"l", {"m3", Dimension::Volume, 1e-3}},
};

// Energy has two canonical units; express both in MJ to compare.
double energy_in_mj(const UnitInfo& u)
{
    return u.canonical == "kWh" ? u.to_canonical * kMjPerKwh : u.to_canonical;
}

} // namespace

std::optional<UnitInfo> lookup(std::string_view unit)
{
    for (const auto& a : s_aliases) {
        if (a.spelling == unit) {
            return a.info;
        }
    }
    return std::nullopt;
}

bool is_canonical(std::string_view unit)
{
    auto info = lookup(unit);
    return info && info->canonical == unit;
}

std::string canonical_unit(std::string_view unit)
{
    auto info = lookup(unit);
    if (!info) {
        throw DataError("unknown unit '{}'", unit);
    }
    return std::string(info->canonical);
}

double conversion_factor(std::string_view from, std::string_view to)
{
    auto a = lookup(from);
    auto b = lookup(to);
    if (!a) {
        throw DataError("unknown unit '{}'", from);
    }
    if (!b) {
        throw DataError("unknown unit '{}'", to);
    }
    if (a->dimension != b->dimension) {
        throw DataError("cannot convert '{}' to '{}'", from, to);
    }
    if (a->dimension == Dimension::Energy) {
        return energy_in_mj(*a) / energy_in_mj(*b);
    }
    return a->to_canonical / b->to_canonical;
}

} // namespace mlca::units
