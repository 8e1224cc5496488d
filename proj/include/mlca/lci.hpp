#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mlca {

enum class FlowKind
{
    Product,
    Elementary,
    Waste,
};

std::string_view to_string(FlowKind kind);
std::optional<FlowKind> parse_flow_kind(std::string_view text);

struct Flow
{
    std::string id;
    FlowKind kind = FlowKind::Product;
    std::string name;
    std::string unit;
    std::string compartment; // elementary flows only, e.g. "air/high population density"

    bool operator==(const Flow&) const = default;
};

// Resources ("natural resource/...") are drawn from nature; everything else
// in an elementary compartment is released to it.
bool is_resource_compartment(std::string_view compartment);

enum class Direction
{
    Input,
    Output,
};

std::string_view to_string(Direction d);
std::optional<Direction> parse_direction(std::string_view text);

// A negative amount is an avoided burden: a negative product input pulls its
// supplier with a negative scaling factor and credits that supplier's burdens.
struct Exchange
{
    std::string flow_id;
    double amount = 0.0;
    std::string unit;
    Direction direction = Direction::Input;

    bool operator==(const Exchange&) const = default;
};

struct UnitProcess
{
    std::string id;
    std::string name;
    std::string reference_product;
    double reference_amount = 1.0;
    std::vector<Exchange> exchanges;

    bool operator==(const UnitProcess&) const = default;
};

// Validated on construction: unique ids, resolvable flows, exactly one
// producer per product/waste flow, exchange units converted to the flow unit.
class BackgroundDatabase
{
public:
    BackgroundDatabase() = default;
    BackgroundDatabase(std::vector<Flow> flows, std::vector<UnitProcess> processes);

    const std::vector<Flow>& flows() const noexcept { return _flows; }
    const std::vector<UnitProcess>& processes() const noexcept { return _processes; }

    const Flow* find_flow(std::string_view id) const;
    const UnitProcess* find_process(std::string_view id) const;
    const UnitProcess* producer_of(std::string_view product) const;

    bool operator==(const BackgroundDatabase& o) const { return _flows == o._flows && _processes == o._processes; }

private:
    std::vector<Flow> _flows;
    std::vector<UnitProcess> _processes;
    std::map<std::string, std::size_t, std::less<>> _flow_index;
    std::map<std::string, std::size_t, std::less<>> _process_index;
    std::map<std::string, std::size_t, std::less<>> _producer_index;
};

// Dense, row-major. Row i of A is product i, produced by column (process) i.
struct MatrixSystem
{
    std::vector<std::string> products;
    std::vector<std::string> processes;
    std::vector<std::string> elementary;
    std::vector<double> A; // n x n
    std::vector<double> B; // m x n
    std::vector<double> f; // n

    std::size_t size() const noexcept { return products.size(); }
    double a(std::size_t i, std::size_t j) const { return A[i * size() + j]; }
    double b(std::size_t r, std::size_t j) const { return B[r * size() + j]; }
};

using Demand = std::map<std::string, double, std::less<>>;

MatrixSystem assemble(const BackgroundDatabase& db, const Demand& demand);

struct SolverOptions
{
    double condition_limit = 1e12;
    double residual_tolerance = 1e-9;
};

// ||A||_1 * ||A^-1||_1, computed exactly (the systems are small).
double condition_number(const MatrixSystem& sys);

std::vector<double> solve_scaling(const MatrixSystem& sys, const SolverOptions& opts = {});

struct FlowVector
{
    std::map<std::string, double, std::less<>> entries;

    double operator[](std::string_view id) const;
    FlowVector& operator+=(const FlowVector& o);
    FlowVector& operator*=(double s);
    friend FlowVector operator+(FlowVector a, const FlowVector& b) { return a += b; }
    friend FlowVector operator*(double s, FlowVector a) { return a *= s; }
    bool operator==(const FlowVector&) const = default;
};

FlowVector inventory(const MatrixSystem& sys, std::span<const double> s);

} // namespace mlca
