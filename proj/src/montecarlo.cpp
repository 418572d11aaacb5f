#include "isac/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

namespace isac {

namespace {

constexpr std::uint64_t kDetectionSalt = 0x44455443554e5431ULL;
constexpr std::uint64_t kCoverageSalt = 0x434f565241474531ULL;
constexpr double kZ95 = 1.96;  // two-sided 95% normal quantile

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Counts successes of per_trial(stream_id) over n_trials with static
// partitioning. The reduction is an integer sum, so the result does not
// depend on the thread count.
template <class TrialFn>
std::uint64_t count_successes(std::uint64_t n_trials, int n_threads, TrialFn per_trial) {
    const int threads = std::min<std::uint64_t>(resolve_threads(n_threads), std::max<std::uint64_t>(n_trials, 1));
    if (threads <= 1) {
        std::uint64_t successes = 0;
        for (std::uint64_t i = 0; i < n_trials; ++i) successes += per_trial(i) ? 1 : 0;
        return successes;
    }

    std::vector<std::uint64_t> partial(static_cast<std::size_t>(threads), 0);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    const std::uint64_t chunk = (n_trials + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        const std::uint64_t begin = chunk * static_cast<std::uint64_t>(t);
        const std::uint64_t end = std::min(n_trials, begin + chunk);
        pool.emplace_back([&, begin, end, t] {
            std::uint64_t successes = 0;
            for (std::uint64_t i = begin; i < end; ++i) successes += per_trial(i) ? 1 : 0;
            partial[static_cast<std::size_t>(t)] = successes;
        });
    }
    for (auto& th : pool) th.join();

    std::uint64_t total = 0;
    for (std::uint64_t s : partial) total += s;
    return total;
}

} // namespace

McEstimate estimate(std::uint64_t successes, std::uint64_t n_trials) {
    if (n_trials == 0) throw std::invalid_argument("estimate: n_trials must be >= 1");
    if (successes > n_trials) throw std::invalid_argument("estimate: successes exceed n_trials");

    McEstimate e;
    e.successes = successes;
    e.n_trials = n_trials;
    const double n = static_cast<double>(n_trials);
    e.p_hat = static_cast<double>(successes) / n;

    const double z2 = kZ95 * kZ95;
    const double denom = 1.0 + z2 / n;
    const double center = (e.p_hat + z2 / (2.0 * n)) / denom;
    const double half = kZ95 / denom *
                        std::sqrt(e.p_hat * (1.0 - e.p_hat) / n + z2 / (4.0 * n * n));
    e.ci_low = std::max(0.0, center - half);
    e.ci_high = std::min(1.0, center + half);
    e.std_err = half / kZ95;
    // The Wilson bounds hit the endpoints exactly at all-success/all-failure;
    // pin them so rounding cannot pull them inward.
    if (successes == 0) e.ci_low = 0.0;
    if (successes == n_trials) e.ci_high = 1.0;
    return e;
}

McEstimate run_detection(const SensingParams& sp, const Geometry& geo,
                         const PhysicalConstants& consts, const McRunSpec& spec) {
    if (spec.n_trials == 0) throw std::invalid_argument("run_detection: n_trials must be >= 1");
    const DerivedSensing ds = derive_sensing(sp, consts);
    const std::uint64_t seed = spec.master_seed ^ kDetectionSalt;
    const std::uint64_t successes =
        count_successes(spec.n_trials, spec.n_threads, [&](std::uint64_t i) {
            RngStream rng(seed, spec.stream_offset + i);
            return detection_trial_derived(sp, ds, geo, rng, spec.placement).success;
        });
    return estimate(successes, spec.n_trials);
}

McEstimate run_coverage(const CommParams& cp, const Geometry& geo,
                        const PhysicalConstants& consts, const McRunSpec& spec) {
    if (spec.n_trials == 0) throw std::invalid_argument("run_coverage: n_trials must be >= 1");
    const DerivedComm dc = derive_comm(cp, consts);
    const std::uint64_t seed = spec.master_seed ^ kCoverageSalt;
    const std::uint64_t successes =
        count_successes(spec.n_trials, spec.n_threads, [&](std::uint64_t i) {
            RngStream rng(seed, spec.stream_offset + i);
            return coverage_trial_derived(cp, dc, geo, rng, spec.placement).success;
        });
    return estimate(successes, spec.n_trials);
}

} // namespace isac
