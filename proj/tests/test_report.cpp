#include <doctest.h>

#include <string>

#include "hyperpend/analysis.hpp"
#include "hyperpend/report.hpp"
#include "hyperpend/svg.hpp"
#include "hyperpend/verify.hpp"

using namespace hyperpend;

TEST_CASE("classification json has the stable keys")
{
    const auto j = to_json(classify_linear(RotationKind::Hyperbolic, 1.0, {3.9, 2.0}));
    for (const char* key : {"class", "c", "jsq", "energy", "case", "components", "equilibria"}) CHECK(j.contains(key));
    CHECK(j["class"] == "hyperbolic");
    CHECK(j["case"] == "3");
    CHECK(j["components"].size() == 2);
    CHECK(j["equilibria"][0]["stability"] == "center");
    // Unbounded extents serialize as null.
    bool has_null = false;
    for (const auto& c : j["components"]) has_null = has_null || c["w1_min"].is_null();
    CHECK(has_null);
}

TEST_CASE("empty parabolic level")
{
    const auto j = to_json(classify_linear(RotationKind::Parabolic, -1.0, {0.0, -1.0}));
    CHECK(j["empty"] == true);
    CHECK(j["components"].empty());
}

TEST_CASE("verification report")
{
    VerifyOptions opts;
    opts.count = 20;
    const VerifyReport r = run_verification(opts);
    CHECK(r.all_passed());
    CHECK(to_json(r)["all_passed"] == true);

    opts.corrupt_bracket = true;
    const VerifyReport bad = run_verification(opts);
    CHECK_FALSE(bad.all_passed());
    int failures = 0;
    for (const auto& s : bad.suites)
        if (!s.passed) {
            ++failures;
            CHECK(s.name == "planted_corruption/elliptic");
        }
    CHECK(failures == 1);

    opts.corrupt_bracket = false;
    opts.count = 0;
    const VerifyReport vac = run_verification(opts);
    CHECK(vac.all_passed());
    CHECK_FALSE(vac.warnings.empty());
}

TEST_CASE("verification is deterministic across backends")
{
    VerifyOptions opts;
    opts.count = 30;
    const VerifyReport a = run_verification(opts);
    opts.backend = kernels::Backend::Serial;
    const VerifyReport b = run_verification(opts);
    REQUIRE(a.suites.size() == b.suites.size());
    for (std::size_t i = 0; i < a.suites.size(); ++i) CHECK(a.suites[i].max_residual == b.suites[i].max_residual);
}

TEST_CASE("svg output")
{
    PlotSpec spec;
    spec.cls = RotationKind::Elliptic;
    spec.potential = Potential::linear(1.0);
    spec.window = default_window(spec.cls);
    for (double e : default_energies(spec.cls, spec.potential, 4.0)) spec.levels.push_back({4.0, e});
    const std::string a = render_svg(spec);
    CHECK(a == render_svg(spec));
    CHECK(a.find("viewBox=\"0 0 800 600\"") != std::string::npos);
    CHECK(a.find("<path") != std::string::npos);
    // One red equilibrium inside the loops.
    const auto eq = plotted_equilibria(spec);
    REQUIRE(eq.size() == 1);
    CHECK(a.find("<circle") != std::string::npos);

    PlotSpec empty;
    empty.cls = RotationKind::Parabolic;
    empty.potential = Potential::linear(-1.0);
    empty.window = default_window(empty.cls);
    empty.levels = {{0.0, -1.0}};
    const std::string e = render_svg(empty);
    CHECK(e.find("<path") == std::string::npos);
    CHECK(e.find("id=\"axes\"") != std::string::npos);
}

TEST_CASE("level polylines close around the center")
{
    const auto lines = level_polylines(RotationKind::Hyperbolic, Potential::linear(1.0), {3.9, 2.0}, {-3, 3, 0}, 801);
    // Upper and lower halves of the unbounded curve and of the loop.
    CHECK(lines.size() == 4);
}
