#pragma once

namespace isac {

// Constants entering the thermal noise model N = k0 * t0 * B * L.
struct PhysicalConstants {
    double boltzmann = 1.38e-23;   // W·s/K
    double temperature_k = 290.0;  // K

    void validate() const;
};

// Conversions between logarithmic engineering units and linear SI units.
// Everything past the configuration boundary computes in linear units (W, m,
// Hz, m²); these helpers only appear where configs and sweeps are parsed.
// All of them reject non-finite input.
double db_to_linear(double db);
double linear_to_db(double ratio);
double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);
double dbsm_to_m2(double dbsm);
double m2_to_dbsm(double area);

} // namespace isac
