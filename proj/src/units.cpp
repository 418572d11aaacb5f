#include "isac/units.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace isac {

namespace {

void require_finite(double x, const char* name) {
    if (!std::isfinite(x)) {
        throw std::invalid_argument(std::string(name) + " must be finite");
    }
}

} // namespace

void PhysicalConstants::validate() const {
    require_finite(boltzmann, "constants.boltzmann");
    require_finite(temperature_k, "constants.temperature_k");
    if (boltzmann < 0.0) throw std::invalid_argument("constants.boltzmann must be >= 0");
    if (temperature_k < 0.0) throw std::invalid_argument("constants.temperature_k must be >= 0");
}

double db_to_linear(double db) {
    require_finite(db, "dB value");
    return std::pow(10.0, db / 10.0);
}

double linear_to_db(double ratio) {
    require_finite(ratio, "linear ratio");
    if (ratio <= 0.0) throw std::invalid_argument("linear ratio must be > 0 for dB conversion");
    return 10.0 * std::log10(ratio);
}

double dbm_to_watts(double dbm) {
    require_finite(dbm, "dBm value");
    return std::pow(10.0, (dbm - 30.0) / 10.0);
}

double watts_to_dbm(double watts) {
    require_finite(watts, "power in W");
    if (watts <= 0.0) throw std::invalid_argument("power must be > 0 for dBm conversion");
    return 10.0 * std::log10(watts) + 30.0;
}

double dbsm_to_m2(double dbsm) {
    require_finite(dbsm, "dBsm value");
    return std::pow(10.0, dbsm / 10.0);
}

double m2_to_dbsm(double area) {
    require_finite(area, "area in m^2");
    if (area <= 0.0) throw std::invalid_argument("area must be > 0 for dBsm conversion");
    return 10.0 * std::log10(area);
}

} // namespace isac
