#include "mlca/csv.hpp"
#include "mlca/text.hpp"

#include <fstream>
#include <sstream>

namespace mlca {

namespace {

// Splits one logical record starting at `pos`. Quoted fields may span lines;
// `line` is advanced for every newline consumed.
std::vector<std::string> split_record(std::string_view text, std::size_t& pos, std::size_t& line,
                                      const std::string& source)
{
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    bool was_quoted = false;
    const std::size_t start_line = line;

    while (pos < text.size()) {
        char c = text[pos];
        if (quoted) {
            if (c == '"') {
                if (pos + 1 < text.size() && text[pos + 1] == '"') {
                    field.push_back('"');
                    pos += 2;
                    continue;
                }
                quoted = false;
                ++pos;
                continue;
            }
            if (c == '\n') {
                ++line;
            }
            field.push_back(c);
            ++pos;
            continue;
        }
        if (c == '"') {
            if (!text::trim(field).empty()) {
                throw ParseError(source, line, "quote inside unquoted field");
            }
            field.clear();
            quoted = true;
            was_quoted = true;
            ++pos;
            continue;
        }
        if (c == ',') {
            fields.push_back(was_quoted ? field : std::string(text::trim(field)));
            field.clear();
            was_quoted = false;
            ++pos;
            continue;
        }
        if (c == '\r') {
            ++pos;
            continue;
        }
        if (c == '\n') {
            ++pos;
            ++line;
            break;
        }
        field.push_back(c);
        ++pos;
    }
    if (quoted) {
        throw ParseError(source, start_line, "unterminated quoted field");
    }
    fields.push_back(was_quoted ? field : std::string(text::trim(field)));
    return fields;
}

bool skippable(std::string_view text, std::size_t pos)
{
    auto end = text.find('\n', pos);
    auto line = text::trim(text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos));
    return line.empty() || line.front() == '#';
}

} // namespace

CsvDocument CsvDocument::parse(std::string_view text, std::string source)
{
    CsvDocument doc;
    doc._source = std::move(source);

    if (text.size() >= 3 && text.substr(0, 3) == "\xEF\xBB\xBF") {
        text.remove_prefix(3);
    }

    std::size_t pos = 0;
    std::size_t line = 1;
    bool have_header = false;
    while (pos < text.size()) {
        if (skippable(text, pos)) {
            auto end = text.find('\n', pos);
            pos = end == std::string_view::npos ? text.size() : end + 1;
            ++line;
            continue;
        }
        const std::size_t record_line = line;
        auto fields = split_record(text, pos, line, doc._source);
        if (!have_header) {
            doc._header = std::move(fields);
            have_header = true;
            continue;
        }
        if (fields.size() != doc._header.size()) {
            throw ParseError(doc._source, record_line,
                             fmt::format("expected {} fields, found {}", doc._header.size(), fields.size()));
        }
        doc._rows.push_back(Row{record_line, std::move(fields)});
    }
    return doc;
}

CsvDocument CsvDocument::read_file(const std::filesystem::path& path)
{
    return parse(read_text_file(path), path.filename().string());
}

std::optional<std::size_t> CsvDocument::column(std::string_view name) const
{
    for (std::size_t i = 0; i < _header.size(); ++i) {
        if (_header[i] == name) {
            return i;
        }
    }
    return std::nullopt;
}

std::size_t CsvDocument::require_column(std::string_view name) const
{
    if (auto c = column(name)) {
        return *c;
    }
    throw ParseError(_source, 1, fmt::format("missing column '{}'", name));
}

const std::string& CsvDocument::cell(const Row& row, std::size_t col) const
{
    if (col >= row.cells.size()) {
        throw error(row, fmt::format("missing field {}", col + 1));
    }
    return row.cells[col];
}

double CsvDocument::number(const Row& row, std::size_t col) const
{
    const auto& c = cell(row, col);
    try {
        return text::to_double(c);
    } catch (const DataError&) {
        throw error(row, fmt::format("column '{}': '{}' is not a finite number", _header.at(col), c));
    }
}

std::optional<double> CsvDocument::optional_number(const Row& row, std::size_t col) const
{
    if (text::trim(cell(row, col)).empty()) {
        return std::nullopt;
    }
    return number(row, col);
}

ParseError CsvDocument::error(const Row& row, const std::string& what) const
{
    return ParseError(_source, row.line, what);
}

std::string csv_escape(std::string_view field)
{
    const bool needs_quotes = field.find_first_of(",\"\n\r") != std::string_view::npos ||
                              (!field.empty() && (field.front() == ' ' || field.back() == ' ' || field.front() == '#'));
    if (!needs_quotes) {
        return std::string(field);
    }
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') {
            out += "\"\"";
        } else {
            out.push_back(c);
        }
    }
    out.push_back('"');
    return out;
}

std::string csv_line(const std::vector<std::string>& fields)
{
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) {
            out.push_back(',');
        }
        out += csv_escape(fields[i]);
    }
    out.push_back('\n');
    return out;
}

std::string read_text_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '{}'", path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view content)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot write '{}'", path.string());
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) {
        throw IoError("write failed for '{}'", path.string());
    }
}

} // namespace mlca
