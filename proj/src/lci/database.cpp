#include "mlca/errors.hpp"
#include "mlca/lci.hpp"
#include "mlca/text.hpp"
#include "mlca/units.hpp"

#include <cmath>

namespace mlca {

std::string_view to_string(FlowKind kind)
{
    switch (kind) {
    case FlowKind::Product: return "product";
    case FlowKind::Elementary: return "elementary";
    case FlowKind::Waste: return "waste";
    }
    return "product";
}

std::optional<FlowKind> parse_flow_kind(std::string_view text)
{
    auto t = text::lower(text::trim(text));
    if (t == "product") {
        return FlowKind::Product;
    }
    if (t == "elementary") {
        return FlowKind::Elementary;
    }
    if (t == "waste") {
        return FlowKind::Waste;
    }
    return std::nullopt;
}

std::string_view to_string(Direction d)
{
    return d == Direction::Input ? "input" : "output";
}

std::optional<Direction> parse_direction(std::string_view text)
{
    auto t = text::lower(text::trim(text));
    if (t == "input" || t == "in") {
        return Direction::Input;
    }
    if (t == "output" || t == "out") {
        return Direction::Output;
    }
    return std::nullopt;
}

bool is_resource_compartment(std::string_view compartment)
{
    return text::starts_with(compartment, "natural resource");
}

BackgroundDatabase::BackgroundDatabase(std::vector<Flow> flows, std::vector<UnitProcess> processes)
: _flows(std::move(flows))
, _processes(std::move(processes))
{
    for (std::size_t i = 0; i < _flows.size(); ++i) {
        auto& fl = _flows[i];
        if (fl.id.empty()) {
            throw IntegrityError("flow #{} has an empty id", i + 1);
        }
        if (fl.unit.empty()) {
            throw IntegrityError("flow '{}' has no unit", fl.id);
        }
        if (!units::lookup(fl.unit)) {
            throw IntegrityError("flow '{}': unknown unit '{}'", fl.id, fl.unit);
        }
        if (!units::is_canonical(fl.unit)) {
            throw IntegrityError("flow '{}': unit '{}' is not canonical (use {})", fl.id, fl.unit,
                                 units::canonical_unit(fl.unit));
        }
        if (fl.kind == FlowKind::Elementary && fl.compartment.empty()) {
            throw IntegrityError("elementary flow '{}' has no compartment", fl.id);
        }
        if (fl.kind != FlowKind::Elementary && !fl.compartment.empty()) {
            throw IntegrityError("{} flow '{}' must not carry a compartment", to_string(fl.kind), fl.id);
        }
        if (!_flow_index.emplace(fl.id, i).second) {
            throw IntegrityError("duplicate flow id '{}'", fl.id);
        }
    }

    for (std::size_t j = 0; j < _processes.size(); ++j) {
        auto& p = _processes[j];
        if (p.id.empty()) {
            throw IntegrityError("process #{} has an empty id", j + 1);
        }
        if (!_process_index.emplace(p.id, j).second) {
            throw IntegrityError("duplicate process id '{}'", p.id);
        }
        const Flow* ref = find_flow(p.reference_product);
        if (ref == nullptr) {
            throw DanglingReferenceError(fmt::format("process '{}' reference product", p.id), p.reference_product);
        }
        if (ref->kind == FlowKind::Elementary) {
            throw IntegrityError("process '{}': reference product '{}' is an elementary flow", p.id, ref->id);
        }
        if (!(p.reference_amount > 0.0) || !std::isfinite(p.reference_amount)) {
            throw IntegrityError("process '{}': reference amount must be positive", p.id);
        }
        auto [it, fresh] = _producer_index.emplace(ref->id, j);
        if (!fresh) {
            throw IntegrityError("product '{}' has two producers: '{}' and '{}'", ref->id,
                                 _processes[it->second].id, p.id);
        }

        for (auto& ex : p.exchanges) {
            const Flow* fl = find_flow(ex.flow_id);
            if (fl == nullptr) {
                throw DanglingReferenceError(fmt::format("process '{}' exchange", p.id), ex.flow_id);
            }
            if (!std::isfinite(ex.amount)) {
                throw IntegrityError("process '{}': non-finite amount for '{}'", p.id, ex.flow_id);
            }
            if (ex.unit.empty()) {
                ex.unit = fl->unit;
            }
            if (ex.unit != fl->unit) {
                try {
                    ex.amount = units::convert(ex.amount, ex.unit, fl->unit);
                } catch (const DataError& e) {
                    throw IntegrityError("process '{}', flow '{}': {}", p.id, ex.flow_id, e.what());
                }
                ex.unit = fl->unit;
            }
            if (fl->kind == FlowKind::Elementary) {
                const bool resource = is_resource_compartment(fl->compartment);
                if (resource && ex.direction != Direction::Input) {
                    throw IntegrityError("process '{}': resource '{}' must be an input", p.id, fl->id);
                }
                if (!resource && ex.direction != Direction::Output) {
                    throw IntegrityError("process '{}': emission '{}' must be an output", p.id, fl->id);
                }
            }
        }
    }

    for (const auto& fl : _flows) {
        if (fl.kind != FlowKind::Elementary && !_producer_index.contains(fl.id)) {
            throw IntegrityError("{} flow '{}' has no producing process", to_string(fl.kind), fl.id);
        }
    }
}

const Flow* BackgroundDatabase::find_flow(std::string_view id) const
{
    auto it = _flow_index.find(id);
    return it == _flow_index.end() ? nullptr : &_flows[it->second];
}

const UnitProcess* BackgroundDatabase::find_process(std::string_view id) const
{
    auto it = _process_index.find(id);
    return it == _process_index.end() ? nullptr : &_processes[it->second];
}

const UnitProcess* BackgroundDatabase::producer_of(std::string_view product) const
{
    auto it = _producer_index.find(product);
    return it == _producer_index.end() ? nullptr : &_processes[it->second];
}

} // namespace mlca
