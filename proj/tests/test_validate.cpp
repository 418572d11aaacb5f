#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "isac/validate.hpp"

using namespace isac;

namespace {

ScenarioConfig base_scenario() {
    ScenarioConfig sc;  // defaults mirror the baseline scenario file
    sc.mc.master_seed = 20250906;
    sc.mc.n_trials = 40000;
    return sc;
}

} // namespace

TEST_CASE("trivial grid passes with zero delta") {
    ScenarioConfig sc = base_scenario();
    sc.sensing.zeta_s_bps = 0.0;
    sc.comm.zeta_c_bps = 0.0;
    sc.mc.n_trials = 2000;

    const ValidationReport report = run_validation({{"none", 0.0, sc, true, true}}, 3.0, 0);
    REQUIRE(report.checks.size() == 2);
    CHECK(report.pass);
    for (const auto& c : report.checks) {
        CHECK(c.analytic_value == 1.0);
        CHECK(c.p_hat == 1.0);
        CHECK(c.sigmas == 0.0);
    }
}

TEST_CASE("baseline scenario passes within 3 sigma") {
    const ScenarioConfig sc = base_scenario();
    const ValidationReport report = run_validation({{"none", 0.0, sc, true, true}}, 3.0, 0);
    REQUIRE(report.checks.size() == 2);
    CHECK(report.pass);
    CHECK(report.max_sigmas < 3.0);
    for (const auto& c : report.checks) {
        CHECK(c.std_err > 0.0);
        CHECK(c.pass);
    }
}

TEST_CASE("corrupted analytic route is caught (negative control)") {
    const ScenarioConfig sc = base_scenario();
    const AnalyticProbeFn corrupted = [](const ScenarioConfig& s, Metric m) {
        const double truth = analytic_probability(s, m);
        return std::min(1.0, truth + 0.05);  // a 5% bias must trip the 3-sigma gate
    };
    const ValidationReport report =
        run_validation({{"none", 0.0, sc, true, true}}, 3.0, 0, corrupted);
    CHECK_FALSE(report.pass);
    CHECK(report.max_sigmas > 3.0);
}

TEST_CASE("distinct tasks use distinct substreams") {
    const ScenarioConfig sc = base_scenario();
    std::vector<ValidationTask> tasks = {{"d", 20.0, sc, true, false},
                                         {"d", 20.0, sc, true, false}};
    const ValidationReport report = run_validation(tasks, 3.0, 0);
    REQUIRE(report.checks.size() == 2);
    // Same scenario, different stream offsets: estimates differ slightly.
    CHECK(report.checks[0].p_hat != report.checks[1].p_hat);
    CHECK(report.pass);
}
