#include "wsnsim/packet.hpp"

#include <array>
#include <stdexcept>

namespace wsnsim {

namespace {

constexpr std::uint16_t kPolynomial = 0x8005;

constexpr std::array<std::uint16_t, 256> makeTable()
{
    std::array<std::uint16_t, 256> table{};
    for (unsigned i = 0; i < 256; ++i) {
        auto crc = static_cast<std::uint16_t>(i << 8);
        for (int bit = 0; bit < 8; ++bit)
            crc = (crc & 0x8000) ? static_cast<std::uint16_t>((crc << 1) ^ kPolynomial)
                                 : static_cast<std::uint16_t>(crc << 1);
        table[i] = crc;
    }
    return table;
}

constexpr auto kTable = makeTable();

} // namespace

std::string_view toString(PacketType type)
{
    return type == PacketType::Beacon ? "beacon" : "data";
}

std::uint16_t crc16(std::span<const std::uint8_t> bytes)
{
    std::uint16_t crc = 0xFFFF;
    for (std::uint8_t b : bytes)
        crc = static_cast<std::uint16_t>((crc << 8) ^ kTable[((crc >> 8) ^ b) & 0xFF]);
    return crc;
}

std::vector<std::uint8_t> encodePacket(const Packet& packet)
{
    const std::size_t length = packet.payload.size() + 2;
    if (length > 0xFF)
        throw std::length_error("payload of " + std::to_string(packet.payload.size()) +
                                " bytes does not fit the length byte");
    std::vector<std::uint8_t> out;
    out.reserve(length + 3);
    out.push_back(static_cast<std::uint8_t>(length));
    out.push_back(packet.address);
    out.push_back(static_cast<std::uint8_t>(packet.type));
    out.insert(out.end(), packet.payload.begin(), packet.payload.end());
    const std::uint16_t crc = crc16(out);
    out.push_back(static_cast<std::uint8_t>(crc >> 8));
    out.push_back(static_cast<std::uint8_t>(crc & 0xFF));
    return out;
}

std::optional<Packet> decodePacket(std::span<const std::uint8_t> bytes)
{
    if (bytes.size() < 5)
        return std::nullopt;
    const std::size_t length = bytes[0];
    if (length < 2 || bytes.size() != length + 3)
        return std::nullopt;
    const auto body = bytes.first(length + 1);
    const std::uint16_t sent = static_cast<std::uint16_t>((bytes[length + 1] << 8) | bytes[length + 2]);
    if (crc16(body) != sent)
        return std::nullopt;
    if (bytes[2] != static_cast<std::uint8_t>(PacketType::Beacon) &&
        bytes[2] != static_cast<std::uint8_t>(PacketType::Data))
        return std::nullopt;

    Packet p;
    p.address = bytes[1];
    p.type = static_cast<PacketType>(bytes[2]);
    p.payload.assign(bytes.begin() + 3, bytes.begin() + 1 + static_cast<std::ptrdiff_t>(length));
    return p;
}

std::vector<std::uint8_t> u16Payload(std::uint16_t value)
{
    return {static_cast<std::uint8_t>(value >> 8), static_cast<std::uint8_t>(value & 0xFF)};
}

std::optional<std::uint16_t> readU16(std::span<const std::uint8_t> payload)
{
    if (payload.size() < 2)
        return std::nullopt;
    return static_cast<std::uint16_t>((payload[0] << 8) | payload[1]);
}

} // namespace wsnsim
