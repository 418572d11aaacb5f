// Command-line front end: evaluates detection/coverage probabilities over
// parameter sweeps (closed-form or Monte-Carlo), sweeps resource budgets into
// trade-off frontiers, and cross-validates the two engines. Emits CSV.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "isac/csv.hpp"
#include "isac/scenario.hpp"
#include "isac/tradeoff.hpp"
#include "isac/validate.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfigError = 2;
constexpr int kExitNumericFailure = 3;
constexpr int kExitValidationFailure = 4;

struct CommonOpts {
    std::string config_path;
    std::string out_path;  // empty = stdout
    std::string sweep_text;
    std::string metric_text;  // "", "detection", "coverage"
    std::uint64_t trials_override = 0;
    bool have_seed = false;
    std::uint64_t seed_override = 0;
    int threads = 0;
};

// Writes `text` to --out or stdout.
void emit(const CommonOpts& opts, const std::string& text) {
    if (opts.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opts.out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + opts.out_path + "'");
    out << text;
}

isac::ScenarioConfig load_config(const CommonOpts& opts) {
    isac::ScenarioConfig sc = isac::load_scenario(opts.config_path);
    if (opts.trials_override > 0) sc.mc.n_trials = opts.trials_override;
    if (opts.have_seed) sc.mc.master_seed = opts.seed_override;
    return sc;
}

// Picks the metric for a sweep: explicit --metric wins, otherwise the side
// the parameter touches; parameters touching both sides need --metric.
isac::Metric resolve_metric(const CommonOpts& opts, const std::string& param) {
    if (opts.metric_text == "detection") return isac::Metric::detection;
    if (opts.metric_text == "coverage") return isac::Metric::coverage;
    const isac::SweepParamInfo info = isac::sweep_param_info(param);
    if (info.sensing_side && info.comm_side) {
        throw isac::ConfigError("parameter '" + param +
                                "' affects both metrics; pass --metric detection|coverage");
    }
    return info.sensing_side ? isac::Metric::detection : isac::Metric::coverage;
}

int run_analytic(const CommonOpts& opts) {
    const isac::ScenarioConfig base = load_config(opts);
    const isac::SweepSpec sweep = isac::parse_sweep(opts.sweep_text);
    const isac::Metric metric = resolve_metric(opts, sweep.param);

    std::string csv = metric == isac::Metric::detection ? "param,value,p_d,est_error\n"
                                                        : "param,value,p_c,est_error\n";
    bool numeric_ok = true;
    for (double value : isac::sweep_grid(sweep)) {
        isac::ScenarioConfig sc = base;
        isac::apply_sweep_value(sc, sweep.param, value);
        sc.validate();
        const isac::AnalyticResult r =
            metric == isac::Metric::detection
                ? isac::pd_analytic(sc.sensing_params(), sc.geometry, sc.constants, sc.quadrature)
                : isac::pc_analytic(sc.comm_params(), sc.geometry, sc.constants, sc.quadrature);
        numeric_ok = numeric_ok && r.converged && std::isfinite(r.value);
        csv += sweep.param + ',' + isac::format_double(value) + ',' +
               isac::format_double(r.value) + ',' + isac::format_double(r.est_error) + '\n';
    }
    emit(opts, csv);
    if (!numeric_ok) {
        std::cerr << "analytic: quadrature failed to converge on at least one grid point\n";
        return kExitNumericFailure;
    }
    return kExitOk;
}

int run_mc(const CommonOpts& opts) {
    const isac::ScenarioConfig base = load_config(opts);
    const isac::SweepSpec sweep = isac::parse_sweep(opts.sweep_text);
    const isac::Metric metric = resolve_metric(opts, sweep.param);
    const std::vector<double> grid = isac::sweep_grid(sweep);

    std::string csv = "param,value,p_hat,ci_low,ci_high,n_trials\n";
    std::uint64_t point_index = 0;
    for (double value : grid) {
        isac::ScenarioConfig sc = base;
        isac::apply_sweep_value(sc, sweep.param, value);
        sc.validate();

        isac::McRunSpec mc;
        mc.master_seed = sc.mc.master_seed;
        mc.n_trials = sc.mc.n_trials;
        mc.placement = sc.mc.placement;
        mc.n_threads = opts.threads;
        mc.stream_offset = point_index * sc.mc.n_trials;

        const isac::McEstimate est =
            metric == isac::Metric::detection
                ? isac::run_detection(sc.sensing_params(), sc.geometry, sc.constants, mc)
                : isac::run_coverage(sc.comm_params(), sc.geometry, sc.constants, mc);
        csv += sweep.param + ',' + isac::format_double(value) + ',' +
               isac::format_double(est.p_hat) + ',' + isac::format_double(est.ci_low) + ',' +
               isac::format_double(est.ci_high) + ',' + isac::format_u64(est.n_trials) + '\n';
        ++point_index;
    }
    emit(opts, csv);
    return kExitOk;
}

int run_tradeoff(const CommonOpts& opts, const std::string& budget_text,
                 const std::string& engine_text, int steps) {
    const isac::ScenarioConfig sc = load_config(opts);
    const isac::SensingParams sp = sc.sensing_params();
    const isac::CommParams cp = sc.comm_params();

    isac::Budget budget;
    if (budget_text == "power") {
        budget.kind = isac::BudgetKind::power;
        budget.total = sp.p_s + cp.p_c;
    } else if (budget_text == "bandwidth") {
        budget.kind = isac::BudgetKind::bandwidth;
        budget.total = sp.b_s + cp.b_c;
    } else {
        throw isac::ConfigError("--budget must be 'power' or 'bandwidth'");
    }
    budget.steps = steps;

    isac::SweepEngine engine;
    engine.quad = sc.quadrature;
    if (engine_text == "analytic") {
        engine.kind = isac::EngineKind::analytic;
    } else if (engine_text == "mc") {
        engine.kind = isac::EngineKind::montecarlo;
        engine.mc.master_seed = sc.mc.master_seed;
        engine.mc.n_trials = sc.mc.n_trials;
        engine.mc.placement = sc.mc.placement;
        engine.mc.n_threads = opts.threads;
    } else {
        throw isac::ConfigError("--engine must be 'analytic' or 'mc'");
    }

    const isac::Frontier frontier = isac::sweep(budget, sp, cp, sc.geometry, sc.constants, engine);

    std::string csv = "rho,p_s_or_b_s,p_c_or_b_c,p_d,p_c,dominated\n";
    bool numeric_ok = true;
    for (const auto& p : frontier.points) {
        numeric_ok = numeric_ok && p.eval_ok;
        csv += isac::format_double(p.rho) + ',' + isac::format_double(p.share_s) + ',' +
               isac::format_double(p.share_c) + ',' + isac::format_double(p.p_d) + ',' +
               isac::format_double(p.p_c) + ',' + (p.dominated ? "1" : "0") + '\n';
    }
    emit(opts, csv);
    if (!numeric_ok) {
        std::cerr << "tradeoff: engine failed on at least one grid point\n";
        return kExitNumericFailure;
    }
    return kExitOk;
}

int run_validate(const CommonOpts& opts) {
    const isac::ScenarioConfig base = load_config(opts);

    std::vector<isac::ValidationTask> tasks;
    if (opts.sweep_text.empty()) {
        tasks.push_back({"none", 0.0, base, true, true});
    } else {
        const isac::SweepSpec sweep = isac::parse_sweep(opts.sweep_text);
        const isac::SweepParamInfo info = isac::sweep_param_info(sweep.param);
        bool det = info.sensing_side;
        bool cov = info.comm_side;
        if (opts.metric_text == "detection") det = true, cov = false;
        if (opts.metric_text == "coverage") det = false, cov = true;
        for (double value : isac::sweep_grid(sweep)) {
            isac::ScenarioConfig sc = base;
            isac::apply_sweep_value(sc, sweep.param, value);
            sc.validate();
            tasks.push_back({sweep.param, value, sc, det, cov});
        }
    }

    const isac::ValidationReport report = isac::run_validation(tasks, 3.0, opts.threads);

    std::string csv = "param,value,metric,analytic,p_hat,std_err,sigmas,pass\n";
    for (const auto& c : report.checks) {
        csv += c.param + ',' + isac::format_double(c.value) + ',' +
               (c.metric == isac::Metric::detection ? "detection" : "coverage") + ',' +
               isac::format_double(c.analytic_value) + ',' + isac::format_double(c.p_hat) + ',' +
               isac::format_double(c.std_err) + ',' + isac::format_double(c.sigmas) + ',' +
               (c.pass ? "1" : "0") + '\n';
    }
    emit(opts, csv);

    std::cerr << "validate: " << report.checks.size() << " checks, max |delta|/std_err = "
              << isac::format_double(report.max_sigmas) << " -> "
              << (report.pass ? "PASS" : "FAIL") << '\n';
    if (!report.pass) {
        for (const auto& c : report.checks) {
            if (!c.pass) {
                std::cerr << "  offending point: " << c.param << '='
                          << isac::format_double(c.value) << ' '
                          << (c.metric == isac::Metric::detection ? "detection" : "coverage")
                          << " sigmas=" << isac::format_double(c.sigmas) << '\n';
            }
        }
        return kExitValidationFailure;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Distributed ISAC network performance toolkit"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string budget_text;
    std::string engine_text = "analytic";
    int steps = 101;

    auto add_common = [&](CLI::App* cmd, bool needs_sweep) {
        cmd->add_option("--config", opts.config_path, "scenario JSON file")->required();
        auto* sweep = cmd->add_option("--sweep", opts.sweep_text, "param:start:stop:steps");
        if (needs_sweep) sweep->required();
        cmd->add_option("--metric", opts.metric_text, "detection|coverage")
            ->check(CLI::IsMember({"", "detection", "coverage"}));
        cmd->add_option("--trials", opts.trials_override, "Monte-Carlo trials per point");
        cmd->add_option("--seed", opts.seed_override, "master seed")
            ->each([&](const std::string&) { opts.have_seed = true; });
        cmd->add_option("--threads", opts.threads, "worker threads (0 = hardware)");
        cmd->add_option("--out", opts.out_path, "output path (default stdout)");
    };

    CLI::App* analytic = app.add_subcommand("analytic", "closed-form probability sweep");
    add_common(analytic, true);
    CLI::App* mc = app.add_subcommand("mc", "Monte-Carlo probability sweep");
    add_common(mc, true);
    CLI::App* tradeoff = app.add_subcommand("tradeoff", "resource budget frontier");
    add_common(tradeoff, false);
    tradeoff->add_option("--budget", budget_text, "power|bandwidth")->required();
    tradeoff->add_option("--engine", engine_text, "analytic|mc");
    tradeoff->add_option("--steps", steps, "allocation grid size");
    CLI::App* validate = app.add_subcommand("validate", "analytic vs Monte-Carlo cross-check");
    add_common(validate, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfigError;
    }

    try {
        if (app.got_subcommand(analytic)) return run_analytic(opts);
        if (app.got_subcommand(mc)) return run_mc(opts);
        if (app.got_subcommand(tradeoff)) return run_tradeoff(opts, budget_text, engine_text, steps);
        if (app.got_subcommand(validate)) return run_validate(opts);
    } catch (const isac::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumericFailure;
    }
    return kExitOk;
}
