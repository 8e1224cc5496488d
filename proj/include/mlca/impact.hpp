#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace mlca {

enum class Indicator : std::uint8_t
{
    GWP100,
    CED,
    ResourceDamage,
    HumanHealthDamage,
    EcosystemDamage,
};

inline constexpr std::size_t kIndicatorCount = 5;

inline constexpr std::array<Indicator, kIndicatorCount> kAllIndicators{
    Indicator::GWP100,
    Indicator::CED,
    Indicator::ResourceDamage,
    Indicator::HumanHealthDamage,
    Indicator::EcosystemDamage,
};

struct IndicatorInfo
{
    std::string_view id;
    std::string_view unit;
    std::string_view method;
};

const IndicatorInfo& indicator_info(Indicator ind);
std::string_view to_string(Indicator ind);

// Accepts the canonical ids plus the short forms used on the command line
// (gwp, ced, rd, hh, ed), case-insensitive.
std::optional<Indicator> parse_indicator(std::string_view text);

// Throws UnknownIndicatorError.
Indicator indicator_from_string(std::string_view text);

constexpr std::size_t index_of(Indicator ind) noexcept
{
    return static_cast<std::size_t>(ind);
}

// One score per indicator, in kAllIndicators order.
class ImpactVector
{
public:
    constexpr ImpactVector() noexcept = default;
    constexpr explicit ImpactVector(const std::array<double, kIndicatorCount>& values) noexcept
    : _values(values)
    {
    }

    static constexpr ImpactVector filled(double v) noexcept
    {
        return ImpactVector({v, v, v, v, v});
    }

    constexpr double operator[](Indicator ind) const noexcept { return _values[index_of(ind)]; }
    constexpr double& operator[](Indicator ind) noexcept { return _values[index_of(ind)]; }
    constexpr double at(std::size_t i) const { return _values.at(i); }
    constexpr double& at(std::size_t i) { return _values.at(i); }

    constexpr const std::array<double, kIndicatorCount>& values() const noexcept { return _values; }

    constexpr ImpactVector& operator+=(const ImpactVector& o) noexcept
    {
        for (std::size_t i = 0; i < kIndicatorCount; ++i) {
            _values[i] += o._values[i];
        }
        return *this;
    }

    constexpr ImpactVector& operator-=(const ImpactVector& o) noexcept
    {
        for (std::size_t i = 0; i < kIndicatorCount; ++i) {
            _values[i] -= o._values[i];
        }
        return *this;
    }

    constexpr ImpactVector& operator*=(double s) noexcept
    {
        for (auto& v : _values) {
            v *= s;
        }
        return *this;
    }

    constexpr ImpactVector& operator/=(double s) noexcept
    {
        for (auto& v : _values) {
            v /= s;
        }
        return *this;
    }

    friend constexpr ImpactVector operator+(ImpactVector a, const ImpactVector& b) noexcept { return a += b; }
    friend constexpr ImpactVector operator-(ImpactVector a, const ImpactVector& b) noexcept { return a -= b; }
    friend constexpr ImpactVector operator*(ImpactVector a, double s) noexcept { return a *= s; }
    friend constexpr ImpactVector operator*(double s, ImpactVector a) noexcept { return a *= s; }
    friend constexpr ImpactVector operator/(ImpactVector a, double s) noexcept { return a /= s; }
    friend constexpr bool operator==(const ImpactVector&, const ImpactVector&) noexcept = default;

    bool is_finite() const noexcept;
    bool is_zero() const noexcept;

private:
    std::array<double, kIndicatorCount> _values{};
};

} // namespace mlca
