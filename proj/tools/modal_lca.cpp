// modal_lca: command-line front end for the modal LCA engine.

#include "mlca/csv.hpp"
#include "mlca/errors.hpp"
#include "mlca/golden.hpp"
#include "mlca/registry.hpp"
#include "mlca/report.hpp"
#include "mlca/scenarios.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <iostream>

using namespace mlca;

namespace {

constexpr int kExitData = 2;
constexpr int kExitIo = 3;
constexpr int kExitValidation = 4;

struct Options
{
    std::string data;
    std::string path = "calibrated";
    std::string indicator = "GWP100";
    std::string format = "csv";
    std::string out;
    std::string mix;
    double occupancy = 0.0;
};

struct Session
{
    Dataset ds;
    Model model;
    ScenarioContext sctx;
    Indicator ind = Indicator::GWP100;
};

Session open_session(const Options& o)
{
    Session s;
    s.ind = indicator_from_string(o.indicator);
    const auto path = parse_data_path(o.path);
    if (!path) {
        throw ConfigurationError("--path must be calibrated or full, got '{}'", o.path);
    }
    s.ds = load_dataset(o.data.empty() ? default_data_root() : std::filesystem::path(o.data));
    for (const auto& w : s.ds.warnings) {
        fmt::print(stderr, "warning: {}\n", w);
    }
    s.model = build_model(s.ds, *path);
    s.sctx = make_scenario_context(s.ds, s.model);
    for (auto& b : s.model.bundles) {
        if (!o.mix.empty()) {
            b.mode = apply_scenario(b.mode, {Axis::Electricity, o.mix, 0.0, {}}, s.sctx);
        }
        if (o.occupancy != 0.0) {
            b.mode.occupancy = o.occupancy;
        }
    }
    return s;
}

void emit(const Options& o, std::string_view content)
{
    if (o.out.empty() || o.out == "-") {
        std::cout << content;
        std::cout.flush();
    } else {
        write_output(o.out, content);
    }
}

std::vector<std::string> resolve_modes(const Session& s, const std::vector<std::string>& requested)
{
    if (requested.empty() || (requested.size() == 1 && requested[0] == "all")) {
        return s.model.mode_ids();
    }
    for (const auto& id : requested) {
        s.model.bundle(id);
    }
    return requested;
}

std::vector<AssessmentResult> assess_all(const Session& s, const std::vector<std::string>& modes)
{
    std::vector<AssessmentResult> out;
    for (const auto& id : modes) {
        const auto& b = s.model.bundle(id);
        auto r = modal_impact(b.mode, b.assets, s.model.context);
        for (const auto& n : r.notices) {
            fmt::print(stderr, "note: {}: {}\n", id, n);
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::string unit_label(Indicator ind)
{
    const auto& info = indicator_info(ind);
    return fmt::format("{} [{}/pkt]", info.id, info.unit);
}

int run_assess(const Options& o, const std::vector<std::string>& modes)
{
    const auto s = open_session(o);
    const auto results = assess_all(s, resolve_modes(s, modes));
    if (o.format == "svg") {
        BarChart chart{"Impact by component", unit_label(s.ind), {}, {}};
        for (const auto& r : results) {
            chart.categories.push_back(r.mode_id);
        }
        for (const auto* comp : {"vehicle", "use", "servicing"}) {
            BarSeries series{comp, {}};
            for (const auto& r : results) {
                for (const auto& c : r.components()) {
                    if (c.component == comp) {
                        series.values.push_back(c.impact[s.ind]);
                    }
                }
            }
            chart.series.push_back(std::move(series));
        }
        BarSeries infra{"infrastructure", {}};
        for (const auto& r : results) {
            double v = 0.0;
            for (const auto& c : r.infrastructure) {
                v += c.impact[s.ind];
            }
            infra.values.push_back(v);
        }
        chart.series.push_back(std::move(infra));
        emit(o, bar_chart_svg(chart));
    } else {
        emit(o, results_csv(results));
    }
    return 0;
}

int run_sweep(const Options& o, const std::string& axis_name, const std::vector<std::string>& modes)
{
    const auto axis = parse_axis(axis_name);
    if (!axis) {
        throw InvalidScenarioError("unknown axis '{}' (lifespan, servicing, shipping, electricity)", axis_name);
    }
    const auto s = open_session(o);
    std::vector<std::string> ids = modes;
    if (ids.empty()) {
        ids = {"shared_bike", "shared_es", "shared_emoped"};
    }
    ids = resolve_modes(s, ids);

    std::vector<AssessmentResult> all;
    BarChart chart{fmt::format("{} sweep", axis_name), unit_label(s.ind), {}, {}};
    std::vector<std::vector<std::pair<std::string, double>>> per_mode;
    for (const auto& id : ids) {
        const auto specs = levels_for(s.sctx, *axis, id);
        if (specs.empty()) {
            throw InvalidScenarioError("no {} levels for '{}'", axis_name, id);
        }
        const auto rs = sweep(s.model.bundle(id), specs, s.sctx, s.model.context);
        std::vector<std::pair<std::string, double>> col;
        for (std::size_t i = 0; i < specs.size(); ++i) {
            if (std::find(chart.categories.begin(), chart.categories.end(), specs[i].level) == chart.categories.end()) {
                chart.categories.push_back(specs[i].level);
            }
            col.emplace_back(specs[i].level, rs[i].total[s.ind]);
        }
        per_mode.push_back(std::move(col));
        all.insert(all.end(), rs.begin(), rs.end());
    }
    if (o.format == "svg") {
        for (std::size_t m = 0; m < ids.size(); ++m) {
            BarSeries series{ids[m], {}};
            for (const auto& cat : chart.categories) {
                auto it = std::find_if(per_mode[m].begin(), per_mode[m].end(),
                                       [&](const auto& p) { return p.first == cat; });
                series.values.push_back(it == per_mode[m].end() ? NAN : it->second);
            }
            chart.series.push_back(std::move(series));
        }
        emit(o, bar_chart_svg(chart));
    } else {
        emit(o, results_csv(all));
    }
    return 0;
}

int run_contrib(const Options& o, const std::string& mode)
{
    const auto s = open_session(o);
    const auto& b = s.model.bundle(mode);
    const auto shares = contribution_breakdown(modal_impact(b.mode, b.assets, s.model.context));
    for (const auto& n : shares.notices) {
        fmt::print(stderr, "note: {}\n", n);
    }
    if (o.format == "svg") {
        BarChart chart{fmt::format("{} contributions", mode), "share of total [%]", {}, {}};
        for (auto ind : kAllIndicators) {
            chart.categories.emplace_back(to_string(ind));
        }
        for (std::size_t c = 0; c < shares.components.size(); ++c) {
            BarSeries series{shares.components[c], {}};
            for (auto ind : kAllIndicators) {
                series.values.push_back(100.0 * shares.shares[index_of(ind)][c]);
            }
            chart.series.push_back(std::move(series));
        }
        emit(o, bar_chart_svg(chart));
    } else {
        emit(o, contribution_csv(shares));
    }
    return 0;
}

int run_breakeven(const Options& o, const std::string& mode, double target)
{
    const auto s = open_session(o);
    const double t = s.ind == Indicator::GWP100 ? target / 1000.0 : target;
    const auto b = breakeven_mileage(s.model.bundle(mode), s.ind, t, s.model.context);
    std::string text = csv_line({"mode", "indicator", "target", "attainable", "mileage_km", "vehicle_lifecycle_per_occupant",
                                 "fixed_per_pkt"});
    text += csv_line({mode, std::string(to_string(s.ind)), format_value(t), b.attainable ? "yes" : "no",
                      b.attainable ? format_value(b.mileage_km) : "", format_value(b.vehicle_lifecycle_per_pkt_km),
                      format_value(b.fixed_per_pkt)});
    emit(o, text);
    if (!b.attainable) {
        fmt::print(stderr, "target {} is at or below the fixed terms ({}); no mileage reaches it\n", format_value(t),
                   format_value(b.fixed_per_pkt));
    }
    return 0;
}

int run_normalize(const Options& o, const std::vector<std::string>& modes)
{
    const auto s = open_session(o);
    const auto m = normalize(assess_all(s, resolve_modes(s, modes)));
    emit(o, o.format == "svg" ? radar_chart_svg(m, "Normalized impacts") : matrix_csv(m));
    return 0;
}

int run_compare(const Options& o, const std::string& set)
{
    const auto s = open_session(o);
    const auto rows = compare_reference(assess_all(s, s.model.mode_ids()), s.ds.references, set);
    if (o.format == "svg") {
        BarChart chart{fmt::format("Comparison with {} reference modes", set), "GWP100 [kg CO2eq/pkt]", {}, {}};
        BarSeries computed{"computed", {}};
        BarSeries reference{"reference", {}};
        for (const auto& r : rows) {
            chart.categories.push_back(r.id);
            computed.values.push_back(r.source == "computed" ? r.value : NAN);
            reference.values.push_back(r.source == "reference" ? r.value : NAN);
        }
        chart.series = {computed, reference};
        emit(o, bar_chart_svg(chart));
    } else {
        emit(o, comparison_csv(rows));
    }
    return 0;
}

int run_validate(const Options& o)
{
    const auto ds = load_dataset(o.data.empty() ? default_data_root() : std::filesystem::path(o.data));
    const auto checks = run_golden_checks(ds);
    std::string text = fmt::format("{:<14} {:<48} {:>12} {:>12} {:>27}  {}\n", "group", "check", "expected", "actual",
                                   "accepted", "status");
    std::size_t failed = 0;
    for (const auto& c : checks) {
        failed += c.pass() ? 0 : 1;
        text += fmt::format("{:<14} {:<48} {:>12.6g} {:>12.6g} [{:>12.6g},{:>12.6g}]  {}\n", c.group, c.name,
                            c.expected, c.actual, c.lo, c.hi, c.pass() ? "PASS" : "FAIL");
    }
    text += fmt::format("{} of {} checks passed\n", checks.size() - failed, checks.size());
    emit(o, text);
    return failed == 0 ? 0 : kExitValidation;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Multicriteria LCA of transport modes per passenger-kilometre"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--data", o.data, "dataset root (default: $MODAL_LCA_DATA or the bundled data)");
    app.add_option("--path", o.path, "calibrated or full")->check(CLI::IsMember({"calibrated", "full"}));
    app.add_option("--indicator", o.indicator, "GWP100, CED, ResourceDamage, HumanHealthDamage, EcosystemDamage");
    app.add_option("--format", o.format, "csv or svg")->check(CLI::IsMember({"csv", "svg"}));
    app.add_option("--out", o.out, "output file (default: stdout)");
    app.add_option("--mix", o.mix, "electricity mix id for use and servicing");
    app.add_option("--occupancy", o.occupancy, "passengers per vehicle, overrides the mode files");

    std::vector<std::string> modes;
    std::string axis;
    std::string mode;
    std::string set = "paris";
    double target = 0.0;

    auto* assess = app.add_subcommand("assess", "assess modes (all by default)");
    assess->add_option("modes", modes, "mode ids");
    auto* sweep_cmd = app.add_subcommand("sweep", "one-at-a-time sweep over an axis");
    sweep_cmd->add_option("axis", axis, "lifespan, servicing, shipping or electricity")->required();
    sweep_cmd->add_option("--mode", modes, "mode id, repeatable (default: the shared modes)");
    auto* contrib = app.add_subcommand("contrib", "component shares of one mode");
    contrib->add_option("mode", mode)->required();
    auto* breakeven = app.add_subcommand("breakeven", "lifetime mileage at which a mode meets a target");
    breakeven->add_option("mode", mode)->required();
    breakeven->add_option("--target", target, "per pkt; grams for GWP100, indicator units otherwise")->required();
    auto* norm = app.add_subcommand("normalize", "divide each indicator by its maximum over the modes");
    norm->add_option("modes", modes, "mode ids");
    auto* compare = app.add_subcommand("compare", "merge computed modes with reference modes on GWP100");
    compare->add_option("--set", set, "reference set (paris, us)");
    auto* validate = app.add_subcommand("validate", "run the golden-number checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitData;
    }

    try {
        if (*assess) {
            return run_assess(o, modes);
        }
        if (*sweep_cmd) {
            return run_sweep(o, axis, modes);
        }
        if (*contrib) {
            return run_contrib(o, mode);
        }
        if (*breakeven) {
            return run_breakeven(o, mode, target);
        }
        if (*norm) {
            return run_normalize(o, modes);
        }
        if (*compare) {
            return run_compare(o, set);
        }
        if (*validate) {
            return run_validate(o);
        }
    } catch (const IoError& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return kExitIo;
    } catch (const Error& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return kExitData;
    }
    return 0;
}
