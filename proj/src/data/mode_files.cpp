// Sectioned "key = value" files describing one transport mode or service vehicle.

#include "mlca/csv.hpp"
#include "mlca/dataset.hpp"
#include "mlca/errors.hpp"
#include "mlca/text.hpp"

#include <cmath>
#include <set>

namespace mlca {

namespace {

struct Entry
{
    std::string key;
    std::string value;
    std::size_t line;
};

struct Section
{
    std::string name;
    std::size_t line;
    std::vector<Entry> entries;
};

std::vector<Section> split_sections(std::string_view text, const std::string& source)
{
    std::vector<Section> sections;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        auto raw = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
        ++line_no;
        pos = end == std::string_view::npos ? text.size() + 1 : end + 1;

        auto line = text::trim(raw);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        if (line.front() == '[') {
            if (line.back() != ']') {
                throw ParseError(source, line_no, "unterminated section header");
            }
            auto name = std::string(text::trim(line.substr(1, line.size() - 2)));
            for (const auto& s : sections) {
                if (s.name == name) {
                    throw ParseError(source, line_no, fmt::format("duplicate section [{}]", name));
                }
            }
            sections.push_back(Section{name, line_no, {}});
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError(source, line_no, "expected 'key = value'");
        }
        if (sections.empty()) {
            throw ParseError(source, line_no, "entry outside of any section");
        }
        Entry e{std::string(text::trim(line.substr(0, eq))), std::string(text::trim(line.substr(eq + 1))), line_no};
        for (const auto& prev : sections.back().entries) {
            if (prev.key == e.key) {
                throw ParseError(source, line_no, fmt::format("duplicate key '{}'", e.key));
            }
        }
        sections.back().entries.push_back(std::move(e));
    }
    return sections;
}

double number(const Entry& e, const std::string& source)
{
    try {
        return text::to_double(e.value);
    } catch (const DataError&) {
        throw ParseError(source, e.line, fmt::format("'{}' expects a number, got '{}'", e.key, e.value));
    }
}

} // namespace

ModeDefinition parse_mode_definition(std::string_view text, const std::string& source)
{
    ModeDefinition d;
    d.has_mode_section = false;
    bool have_vehicle = false;

    for (const auto& sec : split_sections(text, source)) {
        auto unknown = [&](const Entry& e) {
            return ParseError(source, e.line, fmt::format("unknown key '{}' in [{}]", e.key, sec.name));
        };
        if (sec.name == "mode") {
            d.has_mode_section = true;
            for (const auto& e : sec.entries) {
                if (e.key == "id") {
                    d.id = e.value;
                } else if (e.key == "label") {
                    d.label = e.value;
                } else if (e.key == "ownership") {
                    auto o = parse_ownership(e.value);
                    if (!o) {
                        throw ParseError(source, e.line, fmt::format("unknown ownership '{}'", e.value));
                    }
                    d.ownership = *o;
                } else if (e.key == "occupancy") {
                    d.occupancy = number(e, source);
                    if (d.occupancy < 1.0) {
                        throw ParseError(source, e.line, "occupancy must be at least 1");
                    }
                } else if (e.key == "infrastructure") {
                    d.infrastructure = text::split(e.value, ',');
                } else {
                    throw unknown(e);
                }
            }
        } else if (sec.name == "vehicle") {
            have_vehicle = true;
            for (const auto& e : sec.entries) {
                if (e.key == "id") {
                    d.vehicle_id = e.value;
                } else if (e.key == "mass_kg") {
                    d.mass_kg = number(e, source);
                } else if (e.key == "lifetime_km") {
                    d.lifetime_km = number(e, source);
                    if (!(d.lifetime_km > 0.0)) {
                        throw ParseError(source, e.line, "lifetime_km must be positive");
                    }
                } else if (e.key == "lci") {
                    d.lci = e.value;
                } else if (e.key == "fleet") {
                    double total = 0.0;
                    for (const auto& item : text::split(e.value, ',')) {
                        auto parts = text::split(item, ':');
                        if (parts.size() != 3) {
                            throw ParseError(source, e.line, "fleet entries are variant:share:product");
                        }
                        FleetRef f{parts[0], 0.0, parts[2]};
                        try {
                            f.share = text::to_double(parts[1]);
                        } catch (const DataError&) {
                            throw ParseError(source, e.line, fmt::format("bad fleet share '{}'", parts[1]));
                        }
                        total += f.share;
                        d.fleet.push_back(std::move(f));
                    }
                    if (std::abs(total - 1.0) > 1e-9) {
                        throw ParseError(source, e.line, fmt::format("fleet shares sum to {}, not 1", total));
                    }
                } else {
                    throw unknown(e);
                }
            }
        } else if (sec.name == "use") {
            for (const auto& e : sec.entries) {
                if (e.key == "carrier") {
                    auto c = parse_carrier(e.value);
                    if (!c) {
                        throw ParseError(source, e.line, fmt::format("unknown carrier '{}'", e.value));
                    }
                    d.carrier = *c;
                } else if (e.key == "consumption") {
                    d.consumption = number(e, source);
                    if (d.consumption < 0.0) {
                        throw ParseError(source, e.line, "consumption must not be negative");
                    }
                } else if (e.key == "mix") {
                    d.mix = e.value;
                } else if (e.key == "fuel_product") {
                    d.fuel_product = e.value;
                } else if (e.key == "tailpipe") {
                    d.tailpipe = e.value;
                } else {
                    throw unknown(e);
                }
            }
        } else if (sec.name == "servicing") {
            for (const auto& e : sec.entries) {
                if (e.key == "distance_m_per_vkt") {
                    d.servicing_m_per_vkt = number(e, source);
                    if (d.servicing_m_per_vkt < 0.0) {
                        throw ParseError(source, e.line, "servicing distance must not be negative");
                    }
                } else if (e.key == "service_vehicle") {
                    d.service_vehicle = e.value;
                } else {
                    throw unknown(e);
                }
            }
        } else {
            throw ParseError(source, sec.line, fmt::format("unknown section [{}]", sec.name));
        }
    }

    if (!have_vehicle) {
        throw ParseError(source, 0, "missing [vehicle] section");
    }
    if (d.has_mode_section && d.id.empty()) {
        throw ParseError(source, 0, "[mode] needs an id");
    }
    if (!d.has_mode_section && d.vehicle_id.empty()) {
        throw ParseError(source, 0, "[vehicle] needs an id");
    }
    if (!d.tailpipe.empty() && d.carrier != EnergyCarrier::Gasoline && d.carrier != EnergyCarrier::Diesel) {
        throw ParseError(source, 0, "tailpipe emissions only apply to liquid-fuel carriers");
    }
    if (d.ownership == Ownership::Private && d.servicing_m_per_vkt != 0.0) {
        throw ParseError(source, 0, "private modes have no servicing");
    }
    return d;
}

ModeDefinition load_mode_definition(const std::filesystem::path& file)
{
    return parse_mode_definition(read_text_file(file), file.filename().string());
}

std::string serialize_mode_definition(const ModeDefinition& d)
{
    std::string out;
    auto kv = [&](std::string_view key, const std::string& value) {
        if (!value.empty()) {
            out += fmt::format("{} = {}\n", key, value);
        }
    };
    if (d.has_mode_section) {
        out += "[mode]\n";
        kv("id", d.id);
        kv("label", d.label);
        kv("ownership", std::string(to_string(d.ownership)));
        kv("occupancy", text::format_exact(d.occupancy));
        kv("infrastructure", text::join(d.infrastructure, ", "));
        out += "\n";
    }
    out += "[vehicle]\n";
    kv("id", d.vehicle_id);
    kv("mass_kg", text::format_exact(d.mass_kg));
    kv("lifetime_km", text::format_exact(d.lifetime_km));
    kv("lci", d.lci);
    std::vector<std::string> fleet;
    for (const auto& f : d.fleet) {
        fleet.push_back(fmt::format("{}:{}:{}", f.variant, text::format_exact(f.share), f.product));
    }
    kv("fleet", text::join(fleet, ", "));

    out += "\n[use]\n";
    kv("carrier", std::string(to_string(d.carrier)));
    kv("consumption", text::format_exact(d.consumption));
    kv("mix", d.mix);
    kv("fuel_product", d.fuel_product);
    kv("tailpipe", d.tailpipe);

    if (d.servicing_m_per_vkt != 0.0 || !d.service_vehicle.empty()) {
        out += "\n[servicing]\n";
        kv("distance_m_per_vkt", text::format_exact(d.servicing_m_per_vkt));
        kv("service_vehicle", d.service_vehicle);
    }
    return out;
}

} // namespace mlca
