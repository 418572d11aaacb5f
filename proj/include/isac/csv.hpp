#pragma once

#include <charconv>
#include <cstdint>
#include <string>

namespace isac {

// Shortest decimal rendering that round-trips the exact double; keeps CSV
// output byte-stable across runs.
inline std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

inline std::string format_u64(std::uint64_t v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

} // namespace isac
