#pragma once

#include <chrono>
#include <cstdint>

namespace wsnsim {

/// Simulation clock: integer nanoseconds since simulation start.
using SimTime = std::chrono::nanoseconds;

inline constexpr SimTime kTimeZero{0};

/// Seconds (or fractions thereof) to the nearest nanosecond.
SimTime fromSeconds(double seconds);
double toSeconds(SimTime t);

/// Offset of bit boundary `bits` from the frame start: round(bits * 1e9 / datarate) ns.
///
/// Every boundary is rounded independently from the exact rational value, so a
/// frame of 15 bytes at 2400 baud lasts exactly 50 ms and byte edges never drift.
SimTime bitOffset(std::int64_t bits, double datarateBaud);

inline SimTime byteOffset(std::int64_t bytes, double datarateBaud)
{
    return bitOffset(bytes * 8, datarateBaud);
}

} // namespace wsnsim
