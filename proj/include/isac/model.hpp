#pragma once

#include <string>

#include "isac/units.hpp"

namespace isac {

// Physical parameters of the sensing link. All fields are linear SI units;
// the scenario loader converts from dBm/dBi/dBsm/dB at the boundary.
struct SensingParams {
    double p_s = 0.0;        // transmit power of the sensing signal, W
    double g_t = 1.0;        // transmit antenna gain, linear
    double g_r = 1.0;        // receive antenna gain, linear
    double lambda_w = 0.1;   // wavelength, m
    double sigma_bar = 1.0;  // mean radar cross-section, m^2
    double d = 1.0;          // target detection distance, m
    double alpha = 2.0;      // path-loss exponent
    double b_s = 0.0;        // sensing (noise) bandwidth, Hz
    double loss_l = 1.0;     // system loss factor, linear
    double t_pulse = 1e-6;   // radar pulse duration, s
    double duty = 0.01;      // radar duty cycle, in (0, 1]
    int n_interferers = 0;   // expected interferer count
    double zeta_s = 0.0;     // detection rate threshold, bit/s

    void validate(const std::string& prefix = "sensing") const;
};

// Physical parameters of the communication link, linear SI units.
struct CommParams {
    double p_c = 0.0;        // transmit power of the information signal, W
    double g_t = 1.0;        // transmit antenna gain, linear
    double g_r = 1.0;        // receive antenna gain, linear
    double alpha = 2.0;      // path-loss exponent
    double b_c = 0.0;        // communication bandwidth, Hz
    double loss_l = 1.0;     // system loss factor, linear
    int m_transmitters = 1;  // expected legitimate transmitter count (incl. the desired link)
    double zeta_c = 0.0;     // coverage rate threshold, bit/s

    void validate(const std::string& prefix = "comm") const;
};

struct Geometry {
    double radius_r = 500.0;  // network disk radius, m

    void validate(const std::string& prefix = "geometry") const;
};

// Quantities derived from SensingParams once per scenario. gamma_s and eta
// may be +inf for degenerate allocations (b_s = 0 or p_s = 0 with zeta_s > 0);
// callers map those to probability 0 rather than treating them as errors.
struct DerivedSensing {
    double n0 = 0.0;       // sensing noise power k0*t0*b_s*L, W
    double gamma_s = 0.0;  // SINR detection threshold
    double eta = 0.0;      // gamma_s*(4pi)^3 / (p_s*g_t*g_r*lambda^2)
    double a_e = 0.0;      // effective receive aperture g_r*lambda^2/(4pi), m^2
    double s_dens = 0.0;   // unit-distance power density p_s*g_t/(4pi), W
};

struct DerivedComm {
    double n_c = 0.0;      // communication noise power k0*t0*b_c*L, W
    double gamma_c = 0.0;  // SINR coverage threshold 2^(zeta_c/b_c) - 1
    double gamma_p = 0.0;  // gamma_c/(p_c*g_t*g_r), per W
};

// Received target echo power for a given cross-section sample and distance.
double echo_power(const SensingParams& sp, double sigma, double d);

double sensing_noise(const SensingParams& sp, const PhysicalConstants& consts);
double comm_noise(const CommParams& cp, const PhysicalConstants& consts);

// SINR-domain thresholds equivalent to the configured rate thresholds.
// Defined limits: zeta = 0 maps to 0; b = 0 with zeta > 0 maps to +inf.
double gamma_s_of(const SensingParams& sp);
double gamma_c_of(const CommParams& cp);

// Radar estimation information rate and channel capacity, bit/s.
double radar_rate(double sinr_s, const SensingParams& sp);
double capacity(double sinr_c, const CommParams& cp);

DerivedSensing derive_sensing(const SensingParams& sp, const PhysicalConstants& consts);
DerivedComm derive_comm(const CommParams& cp, const PhysicalConstants& consts);

} // namespace isac
