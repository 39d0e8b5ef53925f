#include "wsnsim/decider.hpp"

#include "wsnsim/error.hpp"
#include "wsnsim/propagation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace wsnsim {

std::string_view toString(Modulation modulation)
{
    switch (modulation) {
    case Modulation::Fsk2: return "fsk2";
    }
    return "unknown";
}

std::string_view toString(DropReason reason)
{
    switch (reason) {
    case DropReason::NotLocked: return "not-locked";
    case DropReason::SyncLoss: return "sync-loss";
    case DropReason::CrcFail: return "crc-fail";
    case DropReason::Aborted: return "aborted";
    }
    return "unknown";
}

Decider::Decider(double noiseFloorDbm) : noiseMw_(dbmToMw(noiseFloorDbm)) {}

const ReceptionRecord& Decider::onFrameStart(const AirFrame& frame, double rxPowerDbm, bool ready,
                                             SimTime now)
{
    if (active_.contains(frame.id))
        throw SimulationError("frame " + std::to_string(frame.id) + " already registered");

    closeSegments(now);

    ReceptionRecord rec;
    rec.frame = frame;
    rec.start = now;
    rec.rxPowerDbm = rxPowerDbm;
    rec.signalMw = dbmToMw(rxPowerDbm);
    rec.segmentOpen = now;
    rec.locked = ready && !locked_.has_value();
    if (rec.locked)
        locked_ = frame.id;

    auto [it, inserted] = active_.emplace(frame.id, std::move(rec));
    refreshInterference();
    return it->second;
}

ReceptionRecord Decider::onFrameEnd(FrameId id, SimTime now)
{
    auto it = active_.find(id);
    if (it == active_.end())
        throw SimulationError("frame " + std::to_string(id) + " ended without being registered");

    closeSegments(now);
    ReceptionRecord rec = std::move(it->second);
    active_.erase(it);
    rec.end = now;
    if (locked_ == id)
        locked_.reset();
    refreshInterference();
    return rec;
}

void Decider::closeSegments(SimTime now)
{
    for (auto& [id, rec] : active_) {
        if (now > rec.segmentOpen) {
            rec.segments.push_back(SnirSegment{rec.segmentOpen, now,
                                               rec.signalMw / (noiseMw_ + rec.interferenceMw),
                                               rec.interferenceMw, noiseMw_});
        }
        rec.segmentOpen = now;
    }
}

void Decider::refreshInterference()
{
    for (auto& [id, rec] : active_) {
        double sum = 0.0;
        for (const auto& [otherId, other] : active_) {
            if (otherId != id)
                sum += other.signalMw;
        }
        rec.interferenceMw = sum;
    }
}

double Decider::computeSnir(FrameId id, SimTime at) const
{
    const ReceptionRecord* rec = record(id);
    if (rec == nullptr)
        throw SimulationError("frame " + std::to_string(id) + " is not registered");
    if (at >= rec->segmentOpen)
        return rec->signalMw / (noiseMw_ + rec->interferenceMw);
    return snirAt(*rec, at);
}

double Decider::interferenceMw(FrameId id) const
{
    const ReceptionRecord* rec = record(id);
    if (rec == nullptr)
        throw SimulationError("frame " + std::to_string(id) + " is not registered");
    return rec->interferenceMw;
}

const ReceptionRecord* Decider::record(FrameId id) const
{
    auto it = active_.find(id);
    return it == active_.end() ? nullptr : &it->second;
}

void Decider::abortLock()
{
    if (!locked_)
        return;
    active_.at(*locked_).aborted = true;
    locked_.reset();
}

double snirAt(const ReceptionRecord& record, SimTime at)
{
    for (const auto& seg : record.segments) {
        if (at >= seg.begin && at < seg.end)
            return seg.snirLinear;
    }
    throw std::out_of_range("instant " + std::to_string(at.count()) +
                            " ns lies outside the reception of frame " +
                            std::to_string(record.frame.id));
}

double berForSnir(double snirLinear, Modulation modulation)
{
    if (snirLinear < 0.0)
        throw std::invalid_argument("negative SNIR");
    switch (modulation) {
    case Modulation::Fsk2: return std::clamp(0.5 * std::exp(-snirLinear / 2.0), 0.0, 0.5);
    }
    return 0.5;
}

std::vector<std::uint32_t> drawErrorPositions(std::uint32_t bitCount, double p, RandomStream& rng)
{
    std::vector<std::uint32_t> positions;
    if (bitCount == 0 || p <= 0.0)
        return positions;
    if (p >= 1.0) {
        positions.resize(bitCount);
        for (std::uint32_t i = 0; i < bitCount; ++i)
            positions[i] = i;
        return positions;
    }
    // Number of clean bits before the next error is Geometric(p).
    const double logMiss = std::log1p(-p);
    double next = 0.0;
    while (true) {
        next += std::floor(std::log(rng.uniform()) / logMiss);
        if (next >= bitCount)
            break;
        positions.push_back(static_cast<std::uint32_t>(next));
        next += 1.0;
    }
    return positions;
}

std::vector<std::uint32_t> bitsPerSegment(const ReceptionRecord& record)
{
    std::vector<std::uint32_t> counts(record.segments.size(), 0);
    const std::uint32_t totalBits = record.frame.layout.totalBits();
    std::uint32_t bit = 0;
    for (std::size_t s = 0; s < record.segments.size(); ++s) {
        const SimTime segEnd = record.segments[s].end;
        while (bit < totalBits &&
               record.start + bitOffset(bit, record.frame.datarateBaud) < segEnd) {
            ++counts[s];
            ++bit;
        }
    }
    return counts;
}

FieldErrorCounts drawBitErrors(ReceptionRecord& record, Modulation modulation, RandomStream& rng)
{
    FieldErrorCounts counts{};
    const auto bits = bitsPerSegment(record);
    std::uint32_t firstBit = 0;
    for (std::size_t s = 0; s < record.segments.size(); ++s) {
        const double p = berForSnir(record.segments[s].snirLinear, modulation);
        for (std::uint32_t offset : drawErrorPositions(bits[s], p, rng)) {
            const FrameField field = record.frame.layout.fieldOfBit(firstBit + offset);
            ++counts[static_cast<std::size_t>(field)];
        }
        firstBit += bits[s];
    }
    record.bitErrors = counts;
    return counts;
}

ReceptionOutcome finalizeReception(const ReceptionRecord& record, double rssiResolutionDb)
{
    if (record.aborted)
        return DropReason::Aborted;
    if (!record.locked)
        return DropReason::NotLocked;
    const auto& errors = record.bitErrors;
    if (errors[static_cast<std::size_t>(FrameField::Sync)] > 0)
        return DropReason::SyncLoss;
    if (errors[static_cast<std::size_t>(FrameField::Header)] > 0 ||
        errors[static_cast<std::size_t>(FrameField::Payload)] > 0 ||
        errors[static_cast<std::size_t>(FrameField::Crc)] > 0)
        return DropReason::CrcFail;

    return DecodedFrame{record.frame.id,
                        record.frame.sender,
                        record.start,
                        record.end,
                        record.rxPowerDbm,
                        quantizeRssi(record.rxPowerDbm, rssiResolutionDb),
                        record.frame.bytes};
}

double quantizeRssi(double rxPowerDbm, double resolutionDb)
{
    if (!(resolutionDb > 0.0))
        throw std::invalid_argument("RSSI resolution must be positive");
    return std::round(rxPowerDbm / resolutionDb) * resolutionDb;
}

} // namespace wsnsim
