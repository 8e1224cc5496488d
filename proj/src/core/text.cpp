#include "mlca/text.hpp"
#include "mlca/errors.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>

namespace mlca::text {

std::string_view trim(std::string_view s)
{
    const auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
    while (!s.empty() && is_space(s.front())) {
        s.remove_prefix(1);
    }
    while (!s.empty() && is_space(s.back())) {
        s.remove_suffix(1);
    }
    return s;
}

std::string lower(std::string_view s)
{
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

bool iequals(std::string_view a, std::string_view b)
{
    return lower(a) == lower(b);
}

bool starts_with(std::string_view s, std::string_view prefix)
{
    return s.substr(0, prefix.size()) == prefix;
}

std::vector<std::string> split(std::string_view s, char sep)
{
    std::vector<std::string> out;
    if (trim(s).empty()) {
        return out;
    }
    std::size_t pos = 0;
    while (true) {
        auto next = s.find(sep, pos);
        out.emplace_back(trim(s.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos)));
        if (next == std::string_view::npos) {
            break;
        }
        pos = next + 1;
    }
    return out;
}

double to_double(std::string_view s)
{
    s = trim(s);
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw DataError("'{}' is not a number", s);
    }
    if (!std::isfinite(v)) {
        throw DataError("'{}' is not finite", s);
    }
    return v;
}

std::string format_exact(double v)
{
    return fmt::format("{}", v);
}

std::string format_sig3(double v)
{
    return fmt::format("{:.2e}", v);
}

std::string join(const std::vector<std::string>& parts, std::string_view sep)
{
    return fmt::format("{}", fmt::join(parts, sep));
}

} // namespace mlca::text
