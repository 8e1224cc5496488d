#pragma once

#include "mlca/errors.hpp"

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mlca {

// Comma-separated text with a header row. Fields may be double-quoted
// (RFC 4180 escaping). Blank lines and lines starting with '#' are skipped.
class CsvDocument
{
public:
    struct Row
    {
        std::size_t line = 0;
        std::vector<std::string> cells;
    };

    static CsvDocument parse(std::string_view text, std::string source);
    static CsvDocument read_file(const std::filesystem::path& path);

    const std::string& source() const noexcept { return _source; }
    const std::vector<std::string>& header() const noexcept { return _header; }
    const std::vector<Row>& rows() const noexcept { return _rows; }
    bool empty() const noexcept { return _rows.empty(); }

    std::optional<std::size_t> column(std::string_view name) const;
    std::size_t require_column(std::string_view name) const;

    // Accessors throwing ParseError tagged with the row's line.
    const std::string& cell(const Row& row, std::size_t col) const;
    double number(const Row& row, std::size_t col) const;
    std::optional<double> optional_number(const Row& row, std::size_t col) const;
    ParseError error(const Row& row, const std::string& what) const;

private:
    std::string _source;
    std::vector<std::string> _header;
    std::vector<Row> _rows;
};

std::string csv_escape(std::string_view field);
std::string csv_line(const std::vector<std::string>& fields);

std::string read_text_file(const std::filesystem::path& path);

// Writes atomically enough for our purposes; throws IoError.
void write_text_file(const std::filesystem::path& path, std::string_view content);

} // namespace mlca
