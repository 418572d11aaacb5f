#include "isac/analytic.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace isac {

namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;

AnalyticResult pinned(double value) {
    AnalyticResult r;
    r.value = value;
    r.degenerate = true;
    return r;
}

// Clamp to [0, 1], folding any excess into the error estimate.
void clamp_probability(AnalyticResult& r) {
    if (r.value < 0.0) {
        r.est_error = std::max(r.est_error, -r.value);
        r.value = 0.0;
    } else if (r.value > 1.0) {
        r.est_error = std::max(r.est_error, r.value - 1.0);
        r.value = 1.0;
    }
}

} // namespace

QuadResult interference_factor(double c, double alpha, double radius, const QuadratureSpec& q) {
    if (!(c >= 0.0)) throw std::invalid_argument("interference_factor: c must be >= 0");
    if (!(radius > 0.0)) throw std::invalid_argument("interference_factor: radius must be > 0");
    if (c == 0.0) return {1.0, 0.0, true};
    if (std::isinf(c)) return {0.0, 0.0, true};

    auto integrand = [c, alpha](double l) {
        return std::pow(l, 1.0 + alpha) / (std::pow(l, alpha) + c);
    };
    QuadResult r = integrate(integrand, 0.0, radius, q);
    const double scale = 2.0 / (radius * radius);
    r.value *= scale;
    r.est_error *= scale;
    return r;
}

double interference_factor_closed_form_alpha2(double c, double radius) {
    if (c == 0.0) return 1.0;
    if (std::isinf(c)) return 0.0;
    const double r2 = radius * radius;
    return 1.0 - (c / r2) * std::log1p(r2 / c);
}

QuadResult inner_sensing_factor(const DerivedSensing& ds, const SensingParams& sp,
                                const Geometry& geo, const QuadratureSpec& q) {
    const double c = kFourPi * ds.gamma_s * std::pow(sp.d, 2.0 * sp.alpha) / sp.sigma_bar;
    return interference_factor(c, sp.alpha, geo.radius_r, q);
}

QuadResult inner_comm_factor(const DerivedComm& dc, const CommParams& cp, double r0,
                             const Geometry& geo, const QuadratureSpec& q) {
    if (!(r0 > 0.0 && r0 <= geo.radius_r)) {
        throw std::invalid_argument("inner_comm_factor: r0 must be in (0, R]");
    }
    const double c = dc.gamma_c * std::pow(r0, cp.alpha);
    return interference_factor(c, cp.alpha, geo.radius_r, q);
}

AnalyticResult pd_analytic(const SensingParams& sp, const Geometry& geo,
                           const PhysicalConstants& consts, const QuadratureSpec& q) {
    const DerivedSensing ds = derive_sensing(sp, consts);
    if (ds.gamma_s == 0.0) return pinned(1.0);
    if (std::isinf(ds.gamma_s) || sp.p_s == 0.0) return pinned(0.0);

    const double noise_exponent = ds.eta * std::pow(sp.d, 2.0 * sp.alpha) * ds.n0 / sp.sigma_bar;
    const double noise_factor = std::exp(-noise_exponent);

    AnalyticResult out;
    if (sp.n_interferers == 0) {
        out.value = noise_factor;
        clamp_probability(out);
        return out;
    }

    const QuadResult inner = inner_sensing_factor(ds, sp, geo, q);
    const double n = static_cast<double>(sp.n_interferers);
    out.value = noise_factor * std::pow(inner.value, n);
    out.converged = inner.converged;
    if (inner.value > 0.0) {
        out.est_error = out.value * n * (inner.est_error / inner.value);
    }
    clamp_probability(out);
    return out;
}

AnalyticResult pc_analytic(const CommParams& cp, const Geometry& geo,
                           const PhysicalConstants& consts, const QuadratureSpec& q) {
    const DerivedComm dc = derive_comm(cp, consts);
    if (dc.gamma_c == 0.0) return pinned(1.0);
    if (std::isinf(dc.gamma_c) || cp.p_c == 0.0) return pinned(0.0);

    const double radius = geo.radius_r;
    const double m_minus_1 = static_cast<double>(cp.m_transmitters - 1);

    bool inner_converged = true;
    double max_inner_rel_err = 0.0;
    auto outer_integrand = [&](double r0) {
        if (r0 <= 0.0) return 0.0;  // integrand vanishes with the density 2*r0/R^2
        const double noise_term = std::exp(-dc.gamma_p * std::pow(r0, cp.alpha) * dc.n_c);
        double factor = 1.0;
        if (m_minus_1 > 0.0) {
            const QuadResult inner = inner_comm_factor(dc, cp, r0, geo, q);
            inner_converged = inner_converged && inner.converged;
            if (inner.value > 0.0) {
                max_inner_rel_err = std::max(max_inner_rel_err, inner.est_error / inner.value);
            }
            factor = std::pow(inner.value, m_minus_1);
        }
        return 2.0 * r0 / (radius * radius) * noise_term * factor;
    };

    const QuadResult outer = integrate(outer_integrand, 0.0, radius, q);

    AnalyticResult out;
    out.value = outer.value;
    out.converged = outer.converged && inner_converged;
    out.est_error = outer.est_error + out.value * m_minus_1 * max_inner_rel_err;
    clamp_probability(out);
    return out;
}

} // namespace isac
