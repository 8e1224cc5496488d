#include "mlca/errors.hpp"
#include "mlca/registry.hpp"
#include "mlca/scenarios.hpp"

#include <doctest.h>

#include <algorithm>

using namespace mlca;

namespace {

struct Fixture
{
    Dataset ds = load_dataset(MLCA_TEST_DATA_DIR);
    Model model = build_model(ds, DataPath::Calibrated);
    ScenarioContext sctx = make_scenario_context(ds, model);

    AssessmentResult base(std::string_view id) const
    {
        const auto& b = model.bundle(id);
        return modal_impact(b.mode, b.assets, model.context);
    }
    AssessmentResult run(std::string_view id, const ScenarioSpec& s) const
    {
        return sweep(model.bundle(id), {s}, sctx, model.context).front();
    }
};

const Fixture& fx()
{
    static const Fixture f;
    return f;
}

} // namespace

TEST_CASE("axis names")
{
    CHECK(parse_axis("lifespan") == Axis::Lifespan);
    CHECK(parse_axis("mix") == Axis::Electricity);
    CHECK(!parse_axis("weather"));
    CHECK(ScenarioSpec{Axis::Shipping, "UE1", 0.0, {}}.label() == "shipping:UE1");
}

TEST_CASE("named levels come from the scenario files unchanged")
{
    const auto& f = fx();
    const auto es = levels_for(f.sctx, Axis::Lifespan, "shared_es");
    REQUIRE(es.size() == 4);
    CHECK(es[0].level == "worst");
    CHECK(es[0].value == 1000.0);
    CHECK(es[1].value == 2000.0);
    CHECK(es[2].value == 7300.0);
    CHECK(es[3].value == 13650.0);
    CHECK(levels_for(f.sctx, Axis::Shipping, "shared_bike").size() == 8);
    CHECK(levels_for(f.sctx, Axis::Electricity, "shared_bike").size() == 12);
    CHECK(levels_for(f.sctx, Axis::Servicing, "private_bike").empty());

    const auto& ue2 =
        *std::find_if(f.ds.routes.begin(), f.ds.routes.end(), [](const auto& r) { return r.route_id == "UE2"; });
    REQUIRE(ue2.legs.size() == 5);
    // first rail stretch: 45% diesel, 55% electric traction
    CHECK(ue2.legs[0].distance_km / (ue2.legs[0].distance_km + ue2.legs[1].distance_km) == doctest::Approx(0.45));
}

TEST_CASE("base lifespan is an identity")
{
    const auto& f = fx();
    const auto& b = f.model.bundle("shared_es");
    const auto m = apply_scenario(b.mode, {Axis::Lifespan, "base", 7300.0, {}}, f.sctx);
    CHECK(m == b.mode);
    const auto r = f.run("shared_es", {Axis::Lifespan, "base", 7300.0, {}});
    CHECK(r.total == f.base("shared_es").total);
    CHECK(r.scenario == "lifespan:base");
}

TEST_CASE("impact decreases strictly with lifespan")
{
    const auto& f = fx();
    for (const auto* id : {"shared_bike", "shared_es", "shared_emoped"}) {
        const auto rs = sweep(f.model.bundle(id), levels_for(f.sctx, Axis::Lifespan, id), f.sctx, f.model.context);
        for (std::size_t i = 1; i < rs.size(); ++i) {
            for (auto ind : kAllIndicators) {
                CHECK(rs[i].total[ind] < rs[i - 1].total[ind]);
            }
        }
        const auto& b = f.model.bundle(id);
        const double far = lifespan_asymptote(b, Indicator::GWP100, 1e12, f.model.context);
        const auto base = f.base(id);
        CHECK(far == doctest::Approx(base.total[Indicator::GWP100] - base.vehicle[Indicator::GWP100]).epsilon(1e-6));
    }
}

TEST_CASE("electricity touches only use and servicing")
{
    const auto& f = fx();
    for (const auto* id : {"shared_bike", "shared_es", "shared_emoped", "private_es_mid"}) {
        const auto b = f.base(id);
        const auto r = f.run(id, {Axis::Electricity, "CN", 0.0, {}});
        CHECK(r.vehicle == b.vehicle);
        CHECK(r.infrastructure == b.infrastructure);
        CHECK(r.use[Indicator::GWP100] > b.use[Indicator::GWP100]);
    }
    const auto pb = f.base("private_bike");
    CHECK(f.run("private_bike", {Axis::Electricity, "CN", 0.0, {}}).total == pb.total);
    CHECK_THROWS_AS(f.run("shared_es", {Axis::Electricity, "MARS", 0.0, {}}), InvalidScenarioError);
}

TEST_CASE("servicing is affine in distance and limited to shared modes")
{
    const auto& f = fx();
    auto at = [&](double d) {
        return f.run("shared_emoped", {Axis::Servicing, "x", d, {}}).total[Indicator::GWP100];
    };
    const double a = at(10.0);
    const double b = at(20.0);
    const double c = at(40.0);
    CHECK(c - b == doctest::Approx(2.0 * (b - a)).epsilon(1e-9));
    const auto r = f.run("shared_emoped", {Axis::Servicing, "x", 20.0, {}});
    CHECK(r.vehicle == f.base("shared_emoped").vehicle);

    CHECK_THROWS_AS(f.run("private_es_mid", {Axis::Servicing, "x", 10.0, {}}), InvalidScenarioError);
    CHECK_THROWS_AS(f.run("shared_es", {Axis::Servicing, "x", -1.0, {}}), InvalidScenarioError);
    CHECK_THROWS_AS(f.run("shared_es", {Axis::Servicing, "x", 10.0, "zeppelin"}), InvalidScenarioError);
    CHECK_THROWS_AS(f.run("shared_es", {Axis::Lifespan, "x", 0.0, {}}), InvalidScenarioError);
}

TEST_CASE("shipping is affine in each leg distance")
{
    const auto& f = fx();
    ShippingRoute r1{"T1", "EU", "test", {{FreightMode::Sea, 1000.0}}};
    ShippingRoute r2{"T2", "EU", "test", {{FreightMode::Sea, 2000.0}}};
    ShippingRoute r3{"T3", "EU", "test", {{FreightMode::Sea, 1000.0}, {FreightMode::Air, 500.0}}};
    const auto s1 = shipping_impact(22.0, r1, f.ds.freight);
    const auto s2 = shipping_impact(22.0, r2, f.ds.freight);
    const auto s3 = shipping_impact(22.0, r3, f.ds.freight);
    const auto air = shipping_impact(22.0, {"A", "EU", "", {{FreightMode::Air, 500.0}}}, f.ds.freight);
    for (auto ind : kAllIndicators) {
        CHECK(s2[ind] == doctest::Approx(2.0 * s1[ind]));
        CHECK(s3[ind] == doctest::Approx(s1[ind] + air[ind]));
    }
    CHECK(s1[Indicator::GWP100] == doctest::Approx(0.022 * 1000.0 * 0.010));

    const auto b = f.base("shared_bike");
    const auto r = f.run("shared_bike", {Axis::Shipping, "UE1", 0.0, {}});
    CHECK(r.use == b.use);
    CHECK(r.servicing == b.servicing);
    CHECK(r.vehicle[Indicator::GWP100] > b.vehicle[Indicator::GWP100]);
    CHECK_THROWS_AS(f.run("shared_bike", {Axis::Shipping, "ZZ9", 0.0, {}}), InvalidScenarioError);
}

TEST_CASE("break-even mileage reproduces the target")
{
    const auto& f = fx();
    for (const auto& id : f.model.mode_ids()) {
        for (auto ind : kAllIndicators) {
            const auto& b = f.model.bundle(id);
            const auto base = f.base(id);
            const double target = 1.5 * base.total[ind];
            const auto be = breakeven_mileage(b, ind, target, f.model.context);
            REQUIRE(be.attainable);
            const double at = lifespan_asymptote(b, ind, be.mileage_km, f.model.context);
            CHECK(std::abs(at - target) <= 1e-9 * std::abs(target));

            const auto low = breakeven_mileage(b, ind, 0.5 * be.fixed_per_pkt, f.model.context);
            CHECK(!low.attainable);
        }
    }
}

TEST_CASE("sweep keeps input order and rejects empty level lists")
{
    const auto& f = fx();
    auto specs = levels_for(f.sctx, Axis::Shipping, "shared_es");
    std::reverse(specs.begin(), specs.end());
    const auto rs = sweep(f.model.bundle("shared_es"), specs, f.sctx, f.model.context);
    REQUIRE(rs.size() == specs.size());
    for (std::size_t i = 0; i < rs.size(); ++i) {
        CHECK(rs[i].scenario == specs[i].label());
    }
    CHECK_THROWS_AS(sweep(f.model.bundle("shared_es"), {}, f.sctx, f.model.context), InvalidScenarioError);
}
