#pragma once

#include "wsnsim/kernel.hpp"
#include "wsnsim/sim_time.hpp"

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

namespace wsnsim {

using FrameId = std::uint64_t;

enum class FrameField : std::uint8_t { Preamble, Sync, Header, Payload, Crc };

inline constexpr std::size_t kFrameFieldCount = 5;

std::string_view toString(FrameField field);

/// On-air byte layout: preamble, sync word, header (length, address, type), payload, CRC.
struct ByteLayout {
    std::uint32_t preambleBytes = 4;
    std::uint32_t syncBytes = 4;
    std::uint32_t headerBytes = 3;
    std::uint32_t payloadBytes = 2;
    std::uint32_t crcBytes = 2;

    std::array<std::uint32_t, kFrameFieldCount> fieldBytes() const
    {
        return {preambleBytes, syncBytes, headerBytes, payloadBytes, crcBytes};
    }
    std::uint32_t totalBytes() const
    {
        return preambleBytes + syncBytes + headerBytes + payloadBytes + crcBytes;
    }
    /// Bytes handed over by the link layer (header, payload, CRC).
    std::uint32_t codedBytes() const { return headerBytes + payloadBytes + crcBytes; }
    std::uint32_t totalBits() const { return totalBytes() * 8; }

    /// Field holding bit `bitIndex` (0 = first preamble bit). Throws std::out_of_range past the end.
    FrameField fieldOfBit(std::uint32_t bitIndex) const;
};

SimTime frameDuration(const ByteLayout& layout, double datarateBaud);

/// End of each field relative to the frame start (preamble, sync, header, payload, CRC).
std::array<SimTime, kFrameFieldCount> previewSegments(const ByteLayout& layout, double datarateBaud);

struct AirFrame {
    FrameId id = 0;
    NodeId sender = 0;
    double txPowerDbm = 0.0;
    SimTime start{};
    SimTime duration{};
    double datarateBaud = 2400.0;
    ByteLayout layout;
    std::vector<std::uint8_t> bytes;  // header + payload + CRC

    SimTime end() const { return start + duration; }
};

} // namespace wsnsim
