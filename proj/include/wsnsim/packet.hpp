#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace wsnsim {

enum class PacketType : std::uint8_t { Beacon = 0x00, Data = 0x01 };

std::string_view toString(PacketType type);

inline constexpr std::uint8_t kBroadcastAddress = 0xFF;

/// Link-layer packet: length, address, type, payload, CRC-16.
///
/// The length byte counts address + type + payload, i.e. everything after
/// itself except the CRC. The CRC covers every byte before it and is sent
/// most significant byte first.
struct Packet {
    std::uint8_t address = 0;
    PacketType type = PacketType::Data;
    std::vector<std::uint8_t> payload;

    friend bool operator==(const Packet&, const Packet&) = default;
};

/// CRC-16, polynomial 0x8005, init 0xFFFF, MSB first, no reflection, no final xor.
std::uint16_t crc16(std::span<const std::uint8_t> bytes);

/// Throws std::length_error when the payload does not fit the length byte.
std::vector<std::uint8_t> encodePacket(const Packet& packet);

/// nullopt on a length mismatch, unknown type or CRC failure.
std::optional<Packet> decodePacket(std::span<const std::uint8_t> bytes);

/// Big-endian 16-bit payload helpers.
std::vector<std::uint8_t> u16Payload(std::uint16_t value);
std::optional<std::uint16_t> readU16(std::span<const std::uint8_t> payload);

} // namespace wsnsim
