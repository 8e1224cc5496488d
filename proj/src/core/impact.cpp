#include "mlca/impact.hpp"
#include "mlca/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

namespace mlca {

namespace {

constexpr std::array<IndicatorInfo, kIndicatorCount> s_info{{
    {"GWP100", "kg CO2eq", "IPCC 2013 GWP 100a"},
    {"CED", "MJeq", "Cumulative Energy Demand"},
    {"ResourceDamage", "$", "ReCiPe Endpoint (E) resources"},
    {"HumanHealthDamage", "DALY", "ReCiPe Endpoint (E) human health"},
    {"EcosystemDamage", "species.yr", "ReCiPe Endpoint (E) ecosystems"},
}};

std::string lower(std::string_view s)
{
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

} // namespace

const IndicatorInfo& indicator_info(Indicator ind)
{
    return s_info[index_of(ind)];
}

std::string_view to_string(Indicator ind)
{
    return s_info[index_of(ind)].id;
}

std::optional<Indicator> parse_indicator(std::string_view text)
{
    const auto key = lower(text);
    if (key == "gwp100" || key == "gwp" || key == "cc") {
        return Indicator::GWP100;
    }
    if (key == "ced" || key == "ec" || key == "energy") {
        return Indicator::CED;
    }
    if (key == "resourcedamage" || key == "rd" || key == "dr") {
        return Indicator::ResourceDamage;
    }
    if (key == "humanhealthdamage" || key == "hh" || key == "hhd" || key == "dhh") {
        return Indicator::HumanHealthDamage;
    }
    if (key == "ecosystemdamage" || key == "ed" || key == "de") {
        return Indicator::EcosystemDamage;
    }
    return std::nullopt;
}

Indicator indicator_from_string(std::string_view text)
{
    if (auto ind = parse_indicator(text)) {
        return *ind;
    }
    throw UnknownIndicatorError("unknown indicator '{}'", text);
}

bool ImpactVector::is_finite() const noexcept
{
    return std::all_of(_values.begin(), _values.end(), [](double v) { return std::isfinite(v); });
}

bool ImpactVector::is_zero() const noexcept
{
    return std::all_of(_values.begin(), _values.end(), [](double v) { return v == 0.0; });
}

} // namespace mlca
