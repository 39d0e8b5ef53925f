#pragma once

#include "wsnsim/kernel.hpp"
#include "wsnsim/packet.hpp"
#include "wsnsim/radio.hpp"
#include "wsnsim/sim_time.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace wsnsim {

/// Beacon-driven slot plan shared by the base station and the sensors.
///
/// Slots are anchored at the end of the beacon frame, the instant a sensor
/// learns about the new round: slot i starts (i - 1) * slotTime + slotGuard later.
struct TdmaSchedule {
    SimTime beaconPeriod = std::chrono::seconds{1};
    SimTime slotTime = std::chrono::milliseconds{60};
    SimTime slotGuard = std::chrono::milliseconds{1};
    SimTime wakeLead = std::chrono::milliseconds{1};  // sensors are back in Rx this long before the next beacon
    std::map<NodeId, std::uint32_t> slotOf;

    std::uint32_t slotCount() const;
    SimTime slotStart(SimTime beaconEnd, std::uint32_t slot) const;
    /// Throws ConfigError on duplicate slots or when the slots overflow the period.
    void validate(SimTime beaconAirtime) const;
};

/// Firmware code block with an annotated execution time; the CPU is active while it runs.
struct FirmwareTask {
    std::string name;
    SimTime executionTime{};
};

enum class TaskId : std::uint64_t { BeaconPrep = 1, DataPrep = 2 };

struct RssiLogRecord {
    SimTime time{};
    NodeId baseId = 0;
    NodeId senderId = 0;
    double rssiDbm = 0.0;
    std::uint32_t round = 0;
};

struct ReceivedPacket {
    Packet packet;
    double rssiDbm = 0.0;
    SimTime frameStart{};
};

namespace action {

struct RunTask {
    TaskId task;
    SimTime duration{};
};
struct Transmit {
    Packet packet;
};
struct Schedule {
    EventKind kind;
    SimTime at{};
    std::uint64_t ref = 0;
};
struct SetRadio {
    RadioState state;
};
struct LogRssi {
    RssiLogRecord record;
};

} // namespace action

using FirmwareAction =
    std::variant<action::RunTask, action::Transmit, action::Schedule, action::SetRadio, action::LogRssi>;

enum class Trigger : std::uint8_t { BeaconDue, SlotDue, TaskDone, TxOver, PacketReceived, WaypointHop };

struct FirmwareInput {
    Trigger trigger = Trigger::BeaconDue;
    SimTime now{};
    std::uint64_t ref = 0;  // task id, waypoint index or round
    const ReceivedPacket* packet = nullptr;
};

enum class ListenMode : std::uint8_t { Window, Continuous };
enum class TxTrigger : std::uint8_t { Beacon, Waypoint };

std::string_view toString(ListenMode mode);
std::string_view toString(TxTrigger trigger);

struct BaseStationSettings {
    TdmaSchedule schedule;
    bool beaconEnabled = true;
    ListenMode listen = ListenMode::Window;
    RadioState interRoundState = RadioState::Sleep;
    FirmwareTask beaconPrep{"beacon-prep", {}};
};

/// Sends a beacon every period, listens through the slot window and logs the RSSI
/// of every data packet that passed the CRC check.
class BaseStationFirmware {
public:
    BaseStationFirmware(NodeId id, BaseStationSettings settings);

    RadioState initialRadioState() const;
    std::vector<FirmwareAction> boot() const;
    std::vector<FirmwareAction> step(const FirmwareInput& in);

    std::uint32_t beaconsSent() const { return beaconsSent_; }

private:
    NodeId id_;
    BaseStationSettings settings_;
    std::uint32_t round_ = 0;
    std::uint32_t nextRound_ = 0;
    std::uint32_t beaconsSent_ = 0;
};

struct SensorSettings {
    TdmaSchedule schedule;
    std::uint32_t slot = 1;
    SimTime slotOffset{};  // deliberate mis-scheduling, signed
    TxTrigger trigger = TxTrigger::Beacon;
    RadioState interRoundState = RadioState::Sleep;
    FirmwareTask dataPrep{"data-prep", {}};
};

/// Beacon-triggered nodes transmit once in their slot per decoded beacon and stay
/// silent in rounds whose beacon they missed. Waypoint-triggered nodes transmit on
/// every waypoint arrival and ignore beacons.
class SensorFirmware {
public:
    SensorFirmware(NodeId id, SensorSettings settings);

    RadioState initialRadioState() const;
    std::vector<FirmwareAction> boot() const { return {}; }
    std::vector<FirmwareAction> step(const FirmwareInput& in);

    const SensorSettings& settings() const { return settings_; }

private:
    std::vector<FirmwareAction> startSending(std::uint32_t round);

    NodeId id_;
    SensorSettings settings_;
    std::uint32_t round_ = 0;
    bool sending_ = false;
    SimTime nextWake_{};
};

using Firmware = std::variant<BaseStationFirmware, SensorFirmware>;

} // namespace wsnsim
