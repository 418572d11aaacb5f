#include "isac/model.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace isac {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kFourPi = 4.0 * std::numbers::pi;

void check(bool ok, const std::string& prefix, const char* what) {
    if (!ok) throw std::invalid_argument(prefix + "." + what);
}

void check_finite(double v, const std::string& prefix, const char* name) {
    if (!std::isfinite(v)) {
        throw std::invalid_argument(prefix + "." + name + " must be finite");
    }
}

} // namespace

void SensingParams::validate(const std::string& prefix) const {
    check_finite(p_s, prefix, "p_s");
    check_finite(g_t, prefix, "g_t");
    check_finite(g_r, prefix, "g_r");
    check_finite(lambda_w, prefix, "lambda_w");
    check_finite(sigma_bar, prefix, "sigma_bar");
    check_finite(d, prefix, "d");
    check_finite(alpha, prefix, "alpha");
    check_finite(b_s, prefix, "b_s");
    check_finite(loss_l, prefix, "loss_l");
    check_finite(t_pulse, prefix, "t_pulse");
    check_finite(duty, prefix, "duty");
    check_finite(zeta_s, prefix, "zeta_s");
    check(p_s >= 0.0, prefix, "p_s must be >= 0");
    check(g_t > 0.0, prefix, "g_t must be > 0");
    check(g_r > 0.0, prefix, "g_r must be > 0");
    check(lambda_w > 0.0, prefix, "lambda_w must be > 0");
    check(sigma_bar > 0.0, prefix, "sigma_bar must be > 0");
    check(d > 0.0, prefix, "d must be > 0");
    check(alpha >= 2.0, prefix, "alpha must be >= 2");
    check(b_s >= 0.0, prefix, "b_s must be >= 0");
    check(loss_l >= 1.0, prefix, "loss_l must be >= 1");
    check(t_pulse > 0.0, prefix, "t_pulse must be > 0");
    check(duty > 0.0 && duty <= 1.0, prefix, "duty must be in (0, 1]");
    check(n_interferers >= 0, prefix, "n_interferers must be >= 0");
    check(zeta_s >= 0.0, prefix, "zeta_s must be >= 0");
}

void CommParams::validate(const std::string& prefix) const {
    check_finite(p_c, prefix, "p_c");
    check_finite(g_t, prefix, "g_t");
    check_finite(g_r, prefix, "g_r");
    check_finite(alpha, prefix, "alpha");
    check_finite(b_c, prefix, "b_c");
    check_finite(loss_l, prefix, "loss_l");
    check_finite(zeta_c, prefix, "zeta_c");
    check(p_c >= 0.0, prefix, "p_c must be >= 0");
    check(g_t > 0.0, prefix, "g_t must be > 0");
    check(g_r > 0.0, prefix, "g_r must be > 0");
    check(alpha >= 2.0, prefix, "alpha must be >= 2");
    check(b_c >= 0.0, prefix, "b_c must be >= 0");
    check(loss_l >= 1.0, prefix, "loss_l must be >= 1");
    check(m_transmitters >= 1, prefix, "m_transmitters must be >= 1");
    check(zeta_c >= 0.0, prefix, "zeta_c must be >= 0");
}

void Geometry::validate(const std::string& prefix) const {
    check_finite(radius_r, prefix, "radius_r");
    check(radius_r > 0.0, prefix, "radius_r must be > 0");
}

double echo_power(const SensingParams& sp, double sigma, double d) {
    if (!(d > 0.0)) throw std::invalid_argument("echo_power: distance must be > 0");
    if (sigma < 0.0) throw std::invalid_argument("echo_power: cross-section must be >= 0");
    const double num = sp.p_s * sp.g_t * sp.g_r * sp.lambda_w * sp.lambda_w * sigma;
    return num / (kFourPi * kFourPi * kFourPi * std::pow(d, 2.0 * sp.alpha));
}

double sensing_noise(const SensingParams& sp, const PhysicalConstants& consts) {
    return consts.boltzmann * consts.temperature_k * sp.b_s * sp.loss_l;
}

double comm_noise(const CommParams& cp, const PhysicalConstants& consts) {
    return consts.boltzmann * consts.temperature_k * cp.b_c * cp.loss_l;
}

double gamma_s_of(const SensingParams& sp) {
    if (sp.zeta_s == 0.0) return 0.0;
    if (sp.b_s == 0.0) return kInf;
    const double num = std::exp2(2.0 * sp.t_pulse * sp.zeta_s / sp.duty) - 1.0;
    return num / (2.0 * sp.t_pulse * sp.b_s);
}

double gamma_c_of(const CommParams& cp) {
    if (cp.zeta_c == 0.0) return 0.0;
    if (cp.b_c == 0.0) return kInf;
    return std::exp2(cp.zeta_c / cp.b_c) - 1.0;
}

double radar_rate(double sinr_s, const SensingParams& sp) {
    if (sinr_s < 0.0) throw std::invalid_argument("radar_rate: SINR must be >= 0");
    return sp.duty / (2.0 * sp.t_pulse) * std::log2(1.0 + 2.0 * sp.t_pulse * sp.b_s * sinr_s);
}

double capacity(double sinr_c, const CommParams& cp) {
    if (sinr_c < 0.0) throw std::invalid_argument("capacity: SINR must be >= 0");
    return cp.b_c * std::log2(1.0 + sinr_c);
}

DerivedSensing derive_sensing(const SensingParams& sp, const PhysicalConstants& consts) {
    DerivedSensing ds;
    ds.n0 = sensing_noise(sp, consts);
    ds.gamma_s = gamma_s_of(sp);
    ds.a_e = sp.g_r * sp.lambda_w * sp.lambda_w / kFourPi;
    ds.s_dens = sp.p_s * sp.g_t / kFourPi;
    if (ds.gamma_s == 0.0) {
        ds.eta = 0.0;
    } else if (sp.p_s == 0.0 || std::isinf(ds.gamma_s)) {
        ds.eta = kInf;
    } else {
        ds.eta = ds.gamma_s * kFourPi * kFourPi * kFourPi /
                 (sp.p_s * sp.g_t * sp.g_r * sp.lambda_w * sp.lambda_w);
    }
    return ds;
}

DerivedComm derive_comm(const CommParams& cp, const PhysicalConstants& consts) {
    DerivedComm dc;
    dc.n_c = comm_noise(cp, consts);
    dc.gamma_c = gamma_c_of(cp);
    if (dc.gamma_c == 0.0) {
        dc.gamma_p = 0.0;
    } else if (cp.p_c == 0.0 || std::isinf(dc.gamma_c)) {
        dc.gamma_p = kInf;
    } else {
        dc.gamma_p = dc.gamma_c / (cp.p_c * cp.g_t * cp.g_r);
    }
    return dc;
}

} // namespace isac
