#pragma once

#include "isac/model.hpp"
#include "isac/quadrature.hpp"

namespace isac {

// Probability value produced by the closed-form engine. `degenerate` marks
// values pinned by a defined limit (no quadrature ran); `converged` is false
// when some quadrature hit its depth budget before meeting tolerance.
struct AnalyticResult {
    double value = 0.0;
    double est_error = 0.0;
    bool degenerate = false;
    bool converged = true;
};

// Per-interferer Laplace factor (2/R^2) * Int_0^R l^(1+alpha) / (l^alpha + c) dl.
// Both the sensing and the communication inner integrals reduce to this with
// c = 4*pi*gamma_s*D^(2*alpha)/sigma_bar and c = gamma_c*r0^alpha respectively.
// c = 0 gives exactly 1; c = +inf gives exactly 0.
QuadResult interference_factor(double c, double alpha, double radius, const QuadratureSpec& q);

// Logarithmic closed form of the same integral for alpha = 2:
// 1 - (c/R^2) * ln(1 + R^2/c). Used as an independent cross-check of the
// quadrature route; not called by the probability evaluators.
double interference_factor_closed_form_alpha2(double c, double radius);

// Single-interferer factor of the detection probability, before raising to
// the interferer count n.
QuadResult inner_sensing_factor(const DerivedSensing& ds, const SensingParams& sp,
                                const Geometry& geo, const QuadratureSpec& q);

// Single-interferer factor of the coverage probability at desired-link
// distance r0, before raising to m - 1.
QuadResult inner_comm_factor(const DerivedComm& dc, const CommParams& cp, double r0,
                             const Geometry& geo, const QuadratureSpec& q);

// Probability that the radar estimation rate exceeds zeta_s.
AnalyticResult pd_analytic(const SensingParams& sp, const Geometry& geo,
                           const PhysicalConstants& consts, const QuadratureSpec& q);

// Probability that the channel capacity exceeds zeta_c.
AnalyticResult pc_analytic(const CommParams& cp, const Geometry& geo,
                           const PhysicalConstants& consts, const QuadratureSpec& q);

} // namespace isac
