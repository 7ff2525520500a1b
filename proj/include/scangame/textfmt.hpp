#pragma once
// Formatting helpers for the deterministic text outputs (CSV rows and
// structured records).  snprintf-based so the byte stream is stable across
// runs and platforms with the same libc formatting of IEEE doubles.

#include <cstdio>
#include <string>

namespace scangame {

// Fixed six decimal places, the CSV cell format.
inline std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

// Shortest round-trippable representation for structured records.
inline std::string g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace scangame
