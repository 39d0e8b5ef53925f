#pragma once

#include "wsnsim/frame.hpp"
#include "wsnsim/rng.hpp"
#include "wsnsim/sim_time.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

namespace wsnsim {

enum class Modulation : std::uint8_t { Fsk2 };

std::string_view toString(Modulation modulation);

/// Constant-SNIR stretch of one reception.
struct SnirSegment {
    SimTime begin{};
    SimTime end{};
    double snirLinear = 0.0;
    double interferenceMw = 0.0;
    double noiseMw = 0.0;
};

using FieldErrorCounts = std::array<std::uint32_t, kFrameFieldCount>;

/// One receiver's view of one frame.
struct ReceptionRecord {
    AirFrame frame;
    SimTime start{};  // arrival at this receiver
    SimTime end{};    // set when the frame-end is processed
    double rxPowerDbm = 0.0;
    double signalMw = 0.0;
    bool locked = false;
    bool aborted = false;  // lost the lock because the radio left Rx
    std::vector<SnirSegment> segments;
    FieldErrorCounts bitErrors{};

    // Live bookkeeping while the signal is on the air.
    SimTime segmentOpen{};
    double interferenceMw = 0.0;
};

/// Tracks every signal currently arriving at one radio.
///
/// All signals, locked or not, stay registered so they contribute interference to
/// each other. Each start or end of a signal closes the open SNIR segment of every
/// other registered signal, so segments tile each reception and only change at
/// those instants. Interference sums are recomputed from the registered set after
/// every change, never updated incrementally.
class Decider {
public:
    explicit Decider(double noiseFloorDbm);

    /// `ready` is the transceiver's acceptance check; the first ready arrival takes the lock.
    const ReceptionRecord& onFrameStart(const AirFrame& frame, double rxPowerDbm, bool ready,
                                        SimTime now);
    /// Closes the record, deregisters its signal and releases the lock if held.
    ReceptionRecord onFrameEnd(FrameId id, SimTime now);

    /// signal / (noise + interference) for a registered signal at `at`.
    double computeSnir(FrameId id, SimTime at) const;
    double interferenceMw(FrameId id) const;
    const ReceptionRecord* record(FrameId id) const;

    std::optional<FrameId> lockedFrame() const { return locked_; }
    /// Radio left Rx; the locked reception is marked aborted.
    void abortLock();

    std::size_t activeSignals() const { return active_.size(); }
    double noiseMw() const { return noiseMw_; }

private:
    void closeSegments(SimTime now);
    void refreshInterference();

    double noiseMw_;
    std::map<FrameId, ReceptionRecord> active_;
    std::optional<FrameId> locked_;
};

/// SNIR of a closed record at `at`, looked up in its segment list.
double snirAt(const ReceptionRecord& record, SimTime at);

/// Non-coherent binary FSK: 0.5 * exp(-snir / 2), clamped to [0, 0.5].
double berForSnir(double snirLinear, Modulation modulation);

/// Positions of bit errors among `bitCount` independent bits with error probability `p`.
/// Draws geometric gaps between errors, so very small p costs a single draw.
std::vector<std::uint32_t> drawErrorPositions(std::uint32_t bitCount, double p, RandomStream& rng);

/// Samples bit errors for every segment of a closed record and stores the per-field counts.
FieldErrorCounts drawBitErrors(ReceptionRecord& record, Modulation modulation, RandomStream& rng);

/// Bits of the record whose start instant falls inside each segment.
std::vector<std::uint32_t> bitsPerSegment(const ReceptionRecord& record);

enum class DropReason : std::uint8_t { NotLocked, SyncLoss, CrcFail, Aborted };

std::string_view toString(DropReason reason);

struct DecodedFrame {
    FrameId frame = 0;
    NodeId sender = 0;
    SimTime frameStart{};
    SimTime at{};
    double rxPowerDbm = 0.0;
    double rssiDbm = 0.0;
    std::vector<std::uint8_t> bytes;
};

using ReceptionOutcome = std::variant<DecodedFrame, DropReason>;

/// Preamble errors are ignored; a sync-word error means the frame was never detected;
/// any error in header, payload or CRC fails the CRC check.
ReceptionOutcome finalizeReception(const ReceptionRecord& record, double rssiResolutionDb);

/// Round half away from zero to a multiple of `resolutionDb`.
double quantizeRssi(double rxPowerDbm, double resolutionDb);

} // namespace wsnsim
