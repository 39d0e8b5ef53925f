#include "wsnsim/frame.hpp"

#include <stdexcept>
#include <string>

namespace wsnsim {

std::string_view toString(FrameField field)
{
    switch (field) {
    case FrameField::Preamble: return "preamble";
    case FrameField::Sync: return "sync";
    case FrameField::Header: return "header";
    case FrameField::Payload: return "payload";
    case FrameField::Crc: return "crc";
    }
    return "unknown";
}

FrameField ByteLayout::fieldOfBit(std::uint32_t bitIndex) const
{
    std::uint32_t edge = 0;
    const auto sizes = fieldBytes();
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        edge += sizes[i] * 8;
        if (bitIndex < edge)
            return static_cast<FrameField>(i);
    }
    throw std::out_of_range("bit " + std::to_string(bitIndex) + " beyond a " +
                            std::to_string(edge) + "-bit frame");
}

SimTime frameDuration(const ByteLayout& layout, double datarateBaud)
{
    return byteOffset(layout.totalBytes(), datarateBaud);
}

std::array<SimTime, kFrameFieldCount> previewSegments(const ByteLayout& layout, double datarateBaud)
{
    std::array<SimTime, kFrameFieldCount> ends{};
    std::int64_t cumulative = 0;
    const auto sizes = layout.fieldBytes();
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        cumulative += sizes[i];
        ends[i] = byteOffset(cumulative, datarateBaud);
    }
    return ends;
}

} // namespace wsnsim
