#pragma once

#include "mlca/dataset.hpp"
#include "mlca/derivations.hpp"
#include "mlca/methods.hpp"
#include "mlca/mode_model.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace mlca {

// Every bundled file, parsed and cross-validated. Immutable once loaded.
struct Dataset
{
    std::filesystem::path root;
    std::vector<Flow> flows;
    std::vector<UnitProcess> background;
    std::vector<UnitProcess> foreground;
    BackgroundDatabase db;
    CharacterizationFactorSet cf;
    MixTable mixes;
    FreightTable freight;
    std::vector<TrafficRow> traffic;
    std::vector<InfrastructureLci> infrastructure;
    std::vector<NetworkRow> networks;
    std::vector<HbefaRow> hbefa;
    SurveyTable survey_age;
    SurveyTable survey_usage;
    CalibratedComponentTable calibrated;
    std::vector<ScenarioLevel> lifespans;
    std::vector<ScenarioLevel> servicing_levels;
    std::vector<ShippingRoute> routes;
    std::vector<ReferenceMode> references;
    ParameterTable parameters;
    std::vector<ModeDefinition> modes;
    std::vector<ModeDefinition> service_vehicles;
    std::vector<std::string> warnings;
};

inline constexpr std::array<std::string_view, 12> kRequiredMixes{"FR", "US", "CN", "ES", "UK", "DE",
                                                                  "NO", "NL", "AU", "DK", "IT", "CA"};

// MODAL_LCA_DATA if set, else the data directory of the source tree.
std::filesystem::path default_data_root();

Dataset load_dataset(const std::filesystem::path& root);

// Derived inputs shared by the CLI, the model builder and the checks.
TailpipeCorrection motorcycle_tailpipe(const Dataset& ds);
StationEnergy station_energy(const Dataset& ds);
InfrastructureLci station_lci(const Dataset& ds);

enum class DataPath
{
    Calibrated,
    Full,
};

std::string_view to_string(DataPath p);
std::optional<DataPath> parse_data_path(std::string_view text);

struct ModeBundle
{
    TransportMode mode;
    AssetRegistry assets;
};

struct Model
{
    DataPath path = DataPath::Calibrated;
    ImpactContext context;
    std::vector<ModeBundle> bundles;
    // Service vehicles evaluated from their LCIs, available to scenario overrides.
    std::map<std::string, ServiceVehicle, std::less<>> service_vehicles;

    const ModeBundle& bundle(std::string_view mode_id) const; // throws ConfigurationError
    std::vector<std::string> mode_ids() const;
};

// Full path: every vehicle and infrastructure impact comes from the matrix core.
// Calibrated path: same structure, with vehicle lifecycle, use offset, service
// vehicle lifecycle and infrastructure per-unit impacts solved so that each
// component matches the calibrated component table at base-case parameters.
Model build_model(const Dataset& ds, DataPath path);

} // namespace mlca
