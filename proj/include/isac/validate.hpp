#pragma once

#include <functional>
#include <string>
#include <vector>

#include "isac/analytic.hpp"
#include "isac/scenario.hpp"

namespace isac {

// One analytic-vs-Monte-Carlo comparison at a grid point.
struct ValidationCheck {
    std::string param;
    double value = 0.0;
    Metric metric = Metric::detection;
    double analytic_value = 0.0;
    double p_hat = 0.0;
    double std_err = 0.0;
    double sigmas = 0.0;  // |analytic - p_hat| / std_err
    bool pass = true;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    double max_sigmas = 0.0;
    bool pass = true;
};

struct ValidationTask {
    std::string param = "none";
    double value = 0.0;
    ScenarioConfig scenario;
    bool check_detection = true;
    bool check_coverage = true;
};

// Analytic probability of one metric for a scenario.
double analytic_probability(const ScenarioConfig& sc, Metric metric);

// The analytic route is injectable so a deliberately corrupted evaluator can
// serve as a negative control in tests.
using AnalyticProbeFn = std::function<double(const ScenarioConfig&, Metric)>;

// Runs every task's Monte-Carlo estimate against the analytic value and
// flags points farther than sigma_limit standard errors apart. Task i uses
// stream offset i * n_trials, so grid points are statistically independent.
ValidationReport run_validation(const std::vector<ValidationTask>& tasks, double sigma_limit,
                                int n_threads, const AnalyticProbeFn& analytic = {});

} // namespace isac
