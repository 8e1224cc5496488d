#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace mlca::text {

std::string_view trim(std::string_view s);
std::string lower(std::string_view s);
bool iequals(std::string_view a, std::string_view b);
bool starts_with(std::string_view s, std::string_view prefix);

// Split on a single character, trimming each piece. Empty input gives no pieces.
std::vector<std::string> split(std::string_view s, char sep);

// Strict: the whole (trimmed) string must be a finite number. Throws DataError.
double to_double(std::string_view s);

// Shortest text that parses back to the same double.
std::string format_exact(double v);

// Three significant digits, e.g. 3.29e-02.
std::string format_sig3(double v);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

} // namespace mlca::text
