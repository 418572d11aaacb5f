#include "isac/validate.hpp"

#include <algorithm>
#include <cmath>

#include "isac/montecarlo.hpp"

namespace isac {

double analytic_probability(const ScenarioConfig& sc, Metric metric) {
    if (metric == Metric::detection) {
        return pd_analytic(sc.sensing_params(), sc.geometry, sc.constants, sc.quadrature).value;
    }
    return pc_analytic(sc.comm_params(), sc.geometry, sc.constants, sc.quadrature).value;
}

ValidationReport run_validation(const std::vector<ValidationTask>& tasks, double sigma_limit,
                                int n_threads, const AnalyticProbeFn& analytic) {
    const AnalyticProbeFn probe = analytic ? analytic : AnalyticProbeFn(analytic_probability);

    ValidationReport report;
    std::uint64_t task_index = 0;
    for (const auto& task : tasks) {
        const ScenarioConfig& sc = task.scenario;
        McRunSpec mc;
        mc.master_seed = sc.mc.master_seed;
        mc.n_trials = sc.mc.n_trials;
        mc.placement = sc.mc.placement;
        mc.n_threads = n_threads;
        mc.stream_offset = task_index * sc.mc.n_trials;

        auto add_check = [&](Metric metric, const McEstimate& est) {
            ValidationCheck check;
            check.param = task.param;
            check.value = task.value;
            check.metric = metric;
            check.analytic_value = probe(sc, metric);
            check.p_hat = est.p_hat;
            check.std_err = est.std_err;
            check.sigmas = std::abs(check.analytic_value - check.p_hat) / est.std_err;
            check.pass = check.sigmas <= sigma_limit;
            report.max_sigmas = std::max(report.max_sigmas, check.sigmas);
            report.pass = report.pass && check.pass;
            report.checks.push_back(check);
        };

        if (task.check_detection) {
            add_check(Metric::detection,
                      run_detection(sc.sensing_params(), sc.geometry, sc.constants, mc));
        }
        if (task.check_coverage) {
            add_check(Metric::coverage,
                      run_coverage(sc.comm_params(), sc.geometry, sc.constants, mc));
        }
        ++task_index;
    }
    return report;
}

} // namespace isac
