#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "isac/rng.hpp"
#include "isac/units.hpp"

using namespace isac;

TEST_CASE("decibel conversions on known points") {
    CHECK(db_to_linear(0.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(db_to_linear(10.0) == doctest::Approx(10.0).epsilon(1e-15));
    CHECK(dbm_to_watts(30.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(dbm_to_watts(0.0) == doctest::Approx(1e-3).epsilon(1e-15));
    CHECK(dbm_to_watts(20.0) == doctest::Approx(0.1).epsilon(1e-15));
    CHECK(dbsm_to_m2(10.0) == doctest::Approx(10.0).epsilon(1e-15));
    CHECK(dbsm_to_m2(0.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(dbsm_to_m2(20.0) == doctest::Approx(100.0).epsilon(1e-15));
}

TEST_CASE("round trip within 1e-12 relative over [-100, 100]") {
    for (int i = 0; i <= 200; ++i) {
        const double x = -100.0 + i;
        CHECK(linear_to_db(db_to_linear(x)) == doctest::Approx(x).epsilon(1e-12));
        CHECK(watts_to_dbm(dbm_to_watts(x)) == doctest::Approx(x).epsilon(1e-12));
        CHECK(m2_to_dbsm(dbsm_to_m2(x)) == doctest::Approx(x).epsilon(1e-12));
    }
    RngStream rng(7, 0);
    for (int i = 0; i < 1000; ++i) {
        const double x = -100.0 + 200.0 * rng.next_unit();
        CHECK(linear_to_db(db_to_linear(x)) == doctest::Approx(x).epsilon(1e-12));
    }
}

TEST_CASE("conversions are strictly increasing") {
    RngStream rng(11, 0);
    for (int i = 0; i < 1000; ++i) {
        const double a = -100.0 + 200.0 * rng.next_unit();
        const double b = a + 1e-6 + 10.0 * rng.next_unit();
        CHECK(db_to_linear(a) < db_to_linear(b));
        CHECK(dbm_to_watts(a) < dbm_to_watts(b));
        CHECK(dbsm_to_m2(a) < dbsm_to_m2(b));
    }
}

TEST_CASE("non-finite input rejected") {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(db_to_linear(nan), std::invalid_argument);
    CHECK_THROWS_AS(dbm_to_watts(inf), std::invalid_argument);
    CHECK_THROWS_AS(dbsm_to_m2(-inf), std::invalid_argument);
    CHECK_THROWS_AS(linear_to_db(0.0), std::invalid_argument);
    CHECK_THROWS_AS(linear_to_db(-1.0), std::invalid_argument);
}

TEST_CASE("default physical constants") {
    PhysicalConstants consts;
    CHECK(consts.boltzmann == 1.38e-23);
    CHECK(consts.temperature_k == 290.0);
    CHECK_NOTHROW(consts.validate());
}
