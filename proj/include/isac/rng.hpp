#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace isac {

namespace detail {

// Stafford variant 13 of the splitmix64 finalizer; bijective on 64 bits.
inline constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace detail

// Deterministic per-trial random stream. The state is a hash of
// (master_seed, stream_id), so the sequence produced for a given pair is
// identical regardless of which thread runs the trial or in what order
// trials execute. Draws step a splitmix64 sequence from that state.
class RngStream {
public:
    RngStream(std::uint64_t master_seed, std::uint64_t stream_id)
        : state_(detail::mix64(detail::mix64(master_seed ^ 0x9e3779b97f4a7c15ULL) ^
                               detail::mix64(stream_id ^ 0xd1b54a32d192ed03ULL))) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return detail::mix64(state_);
    }

    // Uniform on (0, 1]; never returns 0, can return exactly 1.
    double next_unit() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

// Inverse-CDF transforms, split out so the sampling math is testable with
// pinned uniform draws.
inline double disk_distance_from_unit(double u, double radius) {
    return radius * std::sqrt(u);
}

inline double exponential_from_unit(double u, double mean) {
    return -mean * std::log(u);
}

// Distance of a uniformly placed node from the disk center; density 2l/R^2
// on (0, R].
template <class Rng>
double sample_disk_distance(Rng& rng, double radius) {
    return disk_distance_from_unit(rng.next_unit(), radius);
}

template <class Rng>
double sample_exponential(Rng& rng, double mean) {
    if (!(mean > 0.0)) throw std::invalid_argument("sample_exponential: mean must be > 0");
    return exponential_from_unit(rng.next_unit(), mean);
}

// Poisson count via exponential interarrival times; exact for the moderate
// means used here (node counts).
template <class Rng>
int sample_poisson(Rng& rng, double mean) {
    if (!(mean >= 0.0)) throw std::invalid_argument("sample_poisson: mean must be >= 0");
    if (mean == 0.0) return 0;
    int count = 0;
    double sum = 0.0;
    while (true) {
        sum += exponential_from_unit(rng.next_unit(), 1.0);
        if (sum > mean) return count;
        ++count;
    }
}

} // namespace isac
