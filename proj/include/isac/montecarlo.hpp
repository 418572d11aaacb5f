#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

#include "isac/model.hpp"
#include "isac/rng.hpp"

namespace isac {

// Node-count model for one realization. The theorems condition on fixed
// counts (exactly n interferers, m transmitters); the Poisson variant exists
// for sensitivity studies only.
enum class Placement { fixed_count, poisson };

struct TrialOutcome {
    double sinr = 0.0;
    double rate = 0.0;     // bit/s
    bool success = false;  // rate above threshold, equivalently SINR above gamma
};

// Aggregated estimate with a Wilson 95% interval. std_err is the Wilson
// half-width divided by z, which stays positive and meaningful at p_hat 0/1.
struct McEstimate {
    double p_hat = 0.0;
    std::uint64_t successes = 0;
    std::uint64_t n_trials = 0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    double std_err = 0.0;
};

McEstimate estimate(std::uint64_t successes, std::uint64_t n_trials);

struct McRunSpec {
    std::uint64_t master_seed = 1;
    std::uint64_t stream_offset = 0;  // first trial uses stream_id = stream_offset
    std::uint64_t n_trials = 100000;
    int n_threads = 0;  // 0 = hardware concurrency
    Placement placement = Placement::fixed_count;
};

// One sensing realization: Swerling-1 cross-section, n interferers placed by
// the disk distance law with unit-mean Rayleigh power fading. Draw order is
// fixed (sigma, count when Poisson, then per interferer distance/fading) and
// is part of the reproducibility contract.
template <class Rng>
TrialOutcome detection_trial_derived(const SensingParams& sp, const DerivedSensing& ds,
                                     const Geometry& geo, Rng& rng,
                                     Placement placement = Placement::fixed_count) {
    const double sigma = sample_exponential(rng, sp.sigma_bar);
    int count = sp.n_interferers;
    if (placement == Placement::poisson) {
        count = sample_poisson(rng, static_cast<double>(sp.n_interferers));
    }
    const double ae_s = ds.a_e * ds.s_dens;
    double interference = 0.0;
    for (int j = 0; j < count; ++j) {
        const double l = sample_disk_distance(rng, geo.radius_r);
        const double h = sample_exponential(rng, 1.0);
        interference += ae_s * h * std::pow(l, -sp.alpha);
    }

    const double echo = echo_power(sp, sigma, sp.d);
    const double denom = interference + ds.n0;
    TrialOutcome out;
    if (denom > 0.0) {
        out.sinr = echo / denom;
    } else {
        out.sinr = echo > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
    }
    out.rate = radar_rate(out.sinr, sp);
    out.success = out.sinr > ds.gamma_s;
    return out;
}

// One communication realization: desired-link distance and fading plus m - 1
// interferers. Draw order: r0, h0, count when Poisson, then per interferer
// distance/fading.
template <class Rng>
TrialOutcome coverage_trial_derived(const CommParams& cp, const DerivedComm& dc,
                                    const Geometry& geo, Rng& rng,
                                    Placement placement = Placement::fixed_count) {
    const double r0 = sample_disk_distance(rng, geo.radius_r);
    const double h0 = sample_exponential(rng, 1.0);
    int count = cp.m_transmitters - 1;
    if (placement == Placement::poisson) {
        count = sample_poisson(rng, static_cast<double>(cp.m_transmitters - 1));
    }
    const double gain = cp.p_c * cp.g_t * cp.g_r;
    double interference = 0.0;
    for (int i = 0; i < count; ++i) {
        const double r = sample_disk_distance(rng, geo.radius_r);
        const double h = sample_exponential(rng, 1.0);
        interference += gain * h * std::pow(r, -cp.alpha);
    }

    const double signal = gain * h0 * std::pow(r0, -cp.alpha);
    const double denom = interference + dc.n_c;
    TrialOutcome out;
    if (denom > 0.0) {
        out.sinr = signal / denom;
    } else {
        out.sinr = signal > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
    }
    out.rate = capacity(out.sinr, cp);
    out.success = out.sinr > dc.gamma_c;
    return out;
}

template <class Rng>
TrialOutcome detection_trial(const SensingParams& sp, const Geometry& geo,
                             const PhysicalConstants& consts, Rng& rng,
                             Placement placement = Placement::fixed_count) {
    return detection_trial_derived(sp, derive_sensing(sp, consts), geo, rng, placement);
}

template <class Rng>
TrialOutcome coverage_trial(const CommParams& cp, const Geometry& geo,
                            const PhysicalConstants& consts, Rng& rng,
                            Placement placement = Placement::fixed_count) {
    return coverage_trial_derived(cp, derive_comm(cp, consts), geo, rng, placement);
}

// Parallel estimators. Trial i uses RngStream(salted master seed,
// stream_offset + i); success counts reduce associatively, so results are
// bit-identical for any thread count. Detection and coverage runs use
// disjoint substream families even under the same master seed.
McEstimate run_detection(const SensingParams& sp, const Geometry& geo,
                         const PhysicalConstants& consts, const McRunSpec& spec);
McEstimate run_coverage(const CommParams& cp, const Geometry& geo,
                        const PhysicalConstants& consts, const McRunSpec& spec);

} // namespace isac
