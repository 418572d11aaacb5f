#include "isac/scenario.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "isac/units.hpp"

namespace isac {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

void reject_unknown_fields(const json& obj, const std::string& section,
                           std::initializer_list<const char*> allowed) {
    for (const auto& [key, _] : obj.items()) {
        bool known = false;
        for (const char* a : allowed) {
            if (key == a) {
                known = true;
                break;
            }
        }
        if (!known) {
            throw ConfigError("unknown field '" + section + "." + key + "'");
        }
    }
}

const json& require_field(const json& obj, const std::string& section, const char* name) {
    auto it = obj.find(name);
    if (it == obj.end()) {
        throw ConfigError("missing required field '" + section + "." + name + "'");
    }
    return *it;
}

double get_number(const json& obj, const std::string& section, const char* name) {
    const json& v = require_field(obj, section, name);
    if (!v.is_number()) {
        throw ConfigError("field '" + section + "." + name + "' must be a number");
    }
    return v.get<double>();
}

int get_int(const json& obj, const std::string& section, const char* name) {
    const json& v = require_field(obj, section, name);
    if (!v.is_number_integer()) {
        throw ConfigError("field '" + section + "." + name + "' must be an integer");
    }
    return v.get<int>();
}

std::uint64_t get_u64(const json& obj, const std::string& section, const char* name) {
    const json& v = require_field(obj, section, name);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
        throw ConfigError("field '" + section + "." + name + "' must be a non-negative integer");
    }
    return v.get<std::uint64_t>();
}

double get_number_or(const json& obj, const std::string& section, const char* name, double def) {
    return obj.contains(name) ? get_number(obj, section, name) : def;
}

} // namespace

SensingParams ScenarioConfig::sensing_params() const {
    SensingParams sp;
    sp.p_s = dbm_to_watts(sensing.p_s_dbm);
    sp.g_t = db_to_linear(sensing.g_t_dbi);
    sp.g_r = db_to_linear(sensing.g_r_dbi);
    sp.lambda_w = sensing.wavelength_m;
    sp.sigma_bar = dbsm_to_m2(sensing.sigma_bar_dbsm);
    sp.d = sensing.target_distance_m;
    sp.alpha = sensing.alpha;
    sp.b_s = sensing.b_s_hz;
    sp.loss_l = db_to_linear(sensing.system_loss_db);
    sp.t_pulse = sensing.pulse_duration_s;
    sp.duty = sensing.duty_cycle;
    sp.n_interferers = sensing.n_interferers;
    sp.zeta_s = sensing.zeta_s_bps;
    return sp;
}

CommParams ScenarioConfig::comm_params() const {
    CommParams cp;
    cp.p_c = dbm_to_watts(comm.p_c_dbm);
    cp.g_t = db_to_linear(comm.g_t_dbi);
    cp.g_r = db_to_linear(comm.g_r_dbi);
    cp.alpha = comm.alpha;
    cp.b_c = comm.b_c_hz;
    cp.loss_l = db_to_linear(comm.system_loss_db);
    cp.m_transmitters = comm.m_transmitters;
    cp.zeta_c = comm.zeta_c_bps;
    return cp;
}

void ScenarioConfig::validate() const {
    try {
        sensing_params().validate("sensing");
        comm_params().validate("comm");
        geometry.validate("geometry");
        constants.validate();
        quadrature.validate("quadrature");
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    if (mc.n_trials == 0) throw ConfigError("mc.n_trials must be >= 1");
}

ScenarioConfig parse_scenario(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text, nullptr, true, /*ignore_comments=*/true);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("invalid JSON: ") + e.what());
    }
    if (!root.is_object()) throw ConfigError("scenario root must be a JSON object");
    reject_unknown_fields(root, "<root>",
                          {"sensing", "comm", "geometry", "constants", "quadrature", "mc"});

    ScenarioConfig sc;

    const json& sen = require_field(root, "<root>", "sensing");
    reject_unknown_fields(sen, "sensing",
                          {"p_s_dbm", "g_t_dbi", "g_r_dbi", "wavelength_m", "sigma_bar_dbsm",
                           "target_distance_m", "alpha", "b_s_hz", "system_loss_db",
                           "pulse_duration_s", "duty_cycle", "n_interferers", "zeta_s_bps"});
    sc.sensing.p_s_dbm = get_number(sen, "sensing", "p_s_dbm");
    sc.sensing.g_t_dbi = get_number(sen, "sensing", "g_t_dbi");
    sc.sensing.g_r_dbi = get_number(sen, "sensing", "g_r_dbi");
    sc.sensing.wavelength_m = get_number(sen, "sensing", "wavelength_m");
    sc.sensing.sigma_bar_dbsm = get_number(sen, "sensing", "sigma_bar_dbsm");
    sc.sensing.target_distance_m = get_number(sen, "sensing", "target_distance_m");
    sc.sensing.alpha = get_number(sen, "sensing", "alpha");
    sc.sensing.b_s_hz = get_number(sen, "sensing", "b_s_hz");
    sc.sensing.system_loss_db = get_number(sen, "sensing", "system_loss_db");
    sc.sensing.pulse_duration_s = get_number(sen, "sensing", "pulse_duration_s");
    sc.sensing.duty_cycle = get_number(sen, "sensing", "duty_cycle");
    sc.sensing.n_interferers = get_int(sen, "sensing", "n_interferers");
    sc.sensing.zeta_s_bps = get_number(sen, "sensing", "zeta_s_bps");

    const json& com = require_field(root, "<root>", "comm");
    reject_unknown_fields(com, "comm",
                          {"p_c_dbm", "g_t_dbi", "g_r_dbi", "alpha", "b_c_hz", "system_loss_db",
                           "m_transmitters", "zeta_c_bps"});
    sc.comm.p_c_dbm = get_number(com, "comm", "p_c_dbm");
    sc.comm.g_t_dbi = get_number(com, "comm", "g_t_dbi");
    sc.comm.g_r_dbi = get_number(com, "comm", "g_r_dbi");
    sc.comm.alpha = get_number(com, "comm", "alpha");
    sc.comm.b_c_hz = get_number(com, "comm", "b_c_hz");
    sc.comm.system_loss_db = get_number(com, "comm", "system_loss_db");
    sc.comm.m_transmitters = get_int(com, "comm", "m_transmitters");
    sc.comm.zeta_c_bps = get_number(com, "comm", "zeta_c_bps");

    const json& geo = require_field(root, "<root>", "geometry");
    reject_unknown_fields(geo, "geometry", {"radius_m"});
    sc.geometry.radius_r = get_number(geo, "geometry", "radius_m");

    if (root.contains("constants")) {
        const json& con = root["constants"];
        reject_unknown_fields(con, "constants", {"boltzmann", "temperature_k"});
        sc.constants.boltzmann = get_number_or(con, "constants", "boltzmann", sc.constants.boltzmann);
        sc.constants.temperature_k =
            get_number_or(con, "constants", "temperature_k", sc.constants.temperature_k);
    }

    if (root.contains("quadrature")) {
        const json& quad = root["quadrature"];
        reject_unknown_fields(quad, "quadrature", {"rel_tol", "abs_tol", "max_depth"});
        sc.quadrature.rel_tol = get_number_or(quad, "quadrature", "rel_tol", sc.quadrature.rel_tol);
        sc.quadrature.abs_tol = get_number_or(quad, "quadrature", "abs_tol", sc.quadrature.abs_tol);
        if (quad.contains("max_depth")) sc.quadrature.max_depth = get_int(quad, "quadrature", "max_depth");
    }

    if (root.contains("mc")) {
        const json& mc = root["mc"];
        reject_unknown_fields(mc, "mc", {"master_seed", "n_trials", "placement"});
        if (mc.contains("master_seed")) sc.mc.master_seed = get_u64(mc, "mc", "master_seed");
        if (mc.contains("n_trials")) sc.mc.n_trials = get_u64(mc, "mc", "n_trials");
        if (mc.contains("placement")) {
            const json& p = mc["placement"];
            if (!p.is_string()) throw ConfigError("field 'mc.placement' must be a string");
            const std::string s = p.get<std::string>();
            if (s == "fixed") {
                sc.mc.placement = Placement::fixed_count;
            } else if (s == "poisson") {
                sc.mc.placement = Placement::poisson;
            } else {
                throw ConfigError("mc.placement must be 'fixed' or 'poisson', got '" + s + "'");
            }
        }
    }

    sc.validate();
    return sc;
}

ScenarioConfig load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open scenario file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

std::string scenario_to_json(const ScenarioConfig& sc) {
    ordered_json root;
    root["sensing"] = {{"p_s_dbm", sc.sensing.p_s_dbm},
                       {"g_t_dbi", sc.sensing.g_t_dbi},
                       {"g_r_dbi", sc.sensing.g_r_dbi},
                       {"wavelength_m", sc.sensing.wavelength_m},
                       {"sigma_bar_dbsm", sc.sensing.sigma_bar_dbsm},
                       {"target_distance_m", sc.sensing.target_distance_m},
                       {"alpha", sc.sensing.alpha},
                       {"b_s_hz", sc.sensing.b_s_hz},
                       {"system_loss_db", sc.sensing.system_loss_db},
                       {"pulse_duration_s", sc.sensing.pulse_duration_s},
                       {"duty_cycle", sc.sensing.duty_cycle},
                       {"n_interferers", sc.sensing.n_interferers},
                       {"zeta_s_bps", sc.sensing.zeta_s_bps}};
    root["comm"] = {{"p_c_dbm", sc.comm.p_c_dbm},
                    {"g_t_dbi", sc.comm.g_t_dbi},
                    {"g_r_dbi", sc.comm.g_r_dbi},
                    {"alpha", sc.comm.alpha},
                    {"b_c_hz", sc.comm.b_c_hz},
                    {"system_loss_db", sc.comm.system_loss_db},
                    {"m_transmitters", sc.comm.m_transmitters},
                    {"zeta_c_bps", sc.comm.zeta_c_bps}};
    root["geometry"] = {{"radius_m", sc.geometry.radius_r}};
    root["constants"] = {{"boltzmann", sc.constants.boltzmann},
                         {"temperature_k", sc.constants.temperature_k}};
    root["quadrature"] = {{"rel_tol", sc.quadrature.rel_tol},
                          {"abs_tol", sc.quadrature.abs_tol},
                          {"max_depth", sc.quadrature.max_depth}};
    root["mc"] = {{"master_seed", sc.mc.master_seed},
                  {"n_trials", sc.mc.n_trials},
                  {"placement", sc.mc.placement == Placement::poisson ? "poisson" : "fixed"}};
    return root.dump(2) + "\n";
}

SweepSpec parse_sweep(const std::string& text) {
    SweepSpec spec;
    std::istringstream in(text);
    std::string part;
    std::vector<std::string> parts;
    while (std::getline(in, part, ':')) parts.push_back(part);
    if (parts.size() != 4) {
        throw ConfigError("sweep spec must be 'param:start:stop:steps', got '" + text + "'");
    }
    spec.param = parts[0];
    try {
        spec.start = std::stod(parts[1]);
        spec.stop = std::stod(parts[2]);
        spec.steps = std::stoi(parts[3]);
    } catch (const std::exception&) {
        throw ConfigError("sweep spec has non-numeric bounds: '" + text + "'");
    }
    if (spec.steps < 1) throw ConfigError("sweep steps must be >= 1");
    sweep_param_info(spec.param);  // reject unknown param names early
    return spec;
}

std::vector<double> sweep_grid(const SweepSpec& spec) {
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(spec.steps));
    if (spec.steps == 1) {
        grid.push_back(spec.start);
        return grid;
    }
    for (int i = 0; i < spec.steps; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(spec.steps - 1);
        grid.push_back(spec.start + t * (spec.stop - spec.start));
    }
    return grid;
}

SweepParamInfo sweep_param_info(const std::string& param) {
    if (param == "zeta_s" || param == "p_s_dbm" || param == "d" || param == "n" ||
        param == "b_s" || param == "sigma_bar_dbsm") {
        return {true, false};
    }
    if (param == "zeta_c" || param == "p_c_dbm" || param == "m" || param == "b_c") {
        return {false, true};
    }
    if (param == "alpha" || param == "radius" || param == "loss_db") {
        return {true, true};
    }
    throw ConfigError("unknown sweep parameter '" + param + "'");
}

void apply_sweep_value(ScenarioConfig& sc, const std::string& param, double value) {
    if (param == "zeta_s") {
        sc.sensing.zeta_s_bps = value;
    } else if (param == "p_s_dbm") {
        sc.sensing.p_s_dbm = value;
    } else if (param == "d") {
        sc.sensing.target_distance_m = value;
    } else if (param == "n") {
        sc.sensing.n_interferers = static_cast<int>(std::llround(value));
    } else if (param == "b_s") {
        sc.sensing.b_s_hz = value;
    } else if (param == "sigma_bar_dbsm") {
        sc.sensing.sigma_bar_dbsm = value;
    } else if (param == "zeta_c") {
        sc.comm.zeta_c_bps = value;
    } else if (param == "p_c_dbm") {
        sc.comm.p_c_dbm = value;
    } else if (param == "m") {
        sc.comm.m_transmitters = static_cast<int>(std::llround(value));
    } else if (param == "b_c") {
        sc.comm.b_c_hz = value;
    } else if (param == "alpha") {
        sc.sensing.alpha = value;
        sc.comm.alpha = value;
    } else if (param == "radius") {
        sc.geometry.radius_r = value;
    } else if (param == "loss_db") {
        sc.sensing.system_loss_db = value;
        sc.comm.system_loss_db = value;
    } else {
        throw ConfigError("unknown sweep parameter '" + param + "'");
    }
}

} // namespace isac
