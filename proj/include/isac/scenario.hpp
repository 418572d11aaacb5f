#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "isac/model.hpp"
#include "isac/montecarlo.hpp"
#include "isac/quadrature.hpp"

namespace isac {

// Configuration problems (bad file, unknown field, violated invariant).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Metric { detection, coverage };

// One network scenario in boundary units: powers in dBm, antenna gains in
// dBi, cross-section in dBsm, loss in dB, everything else linear SI. The
// *_params() accessors produce the linear-unit structs the engines consume.
struct ScenarioConfig {
    struct Sensing {
        double p_s_dbm = 23.0;
        double g_t_dbi = 10.0;
        double g_r_dbi = 10.0;
        double wavelength_m = 0.0833;
        double sigma_bar_dbsm = 10.0;
        double target_distance_m = 20.0;
        double alpha = 2.0;
        double b_s_hz = 2.0e7;
        double system_loss_db = 10.0;
        double pulse_duration_s = 1.0e-6;
        double duty_cycle = 0.01;
        int n_interferers = 10;
        double zeta_s_bps = 5000.0;
    } sensing;

    struct Comm {
        double p_c_dbm = 23.0;
        double g_t_dbi = 10.0;
        double g_r_dbi = 10.0;
        double alpha = 2.0;
        double b_c_hz = 2.0e7;
        double system_loss_db = 10.0;
        int m_transmitters = 10;
        double zeta_c_bps = 2.0e6;
    } comm;

    Geometry geometry;
    PhysicalConstants constants;
    QuadratureSpec quadrature;

    struct Mc {
        std::uint64_t master_seed = 20250901;
        std::uint64_t n_trials = 100000;
        Placement placement = Placement::fixed_count;
    } mc;

    SensingParams sensing_params() const;
    CommParams comm_params() const;

    // Throws ConfigError naming the offending field.
    void validate() const;
};

// Parses a scenario from JSON text. `//` comments are accepted so shipped
// scenario files can document which values are assumptions. Unknown fields
// are rejected.
ScenarioConfig parse_scenario(const std::string& json_text);
ScenarioConfig load_scenario(const std::string& path);
std::string scenario_to_json(const ScenarioConfig& sc);

// 1-D sweep over one scenario field, "param:start:stop:steps".
struct SweepSpec {
    std::string param;
    double start = 0.0;
    double stop = 0.0;
    int steps = 1;
};

SweepSpec parse_sweep(const std::string& text);
std::vector<double> sweep_grid(const SweepSpec& spec);

// Which side(s) of the model a sweep parameter touches; decides the default
// metric for a sweep. Unknown names throw ConfigError.
struct SweepParamInfo {
    bool sensing_side = false;
    bool comm_side = false;
};
SweepParamInfo sweep_param_info(const std::string& param);
void apply_sweep_value(ScenarioConfig& sc, const std::string& param, double value);

} // namespace isac
