#include "wsnsim/firmware.hpp"

#include "wsnsim/error.hpp"

#include <algorithm>
#include <set>

namespace wsnsim {

std::string_view toString(ListenMode mode)
{
    return mode == ListenMode::Window ? "window" : "continuous";
}

std::string_view toString(TxTrigger trigger)
{
    return trigger == TxTrigger::Beacon ? "beacon" : "waypoint";
}

std::uint32_t TdmaSchedule::slotCount() const
{
    std::uint32_t n = 0;
    for (const auto& [node, slot] : slotOf)
        n = std::max(n, slot);
    return n;
}

SimTime TdmaSchedule::slotStart(SimTime beaconEnd, std::uint32_t slot) const
{
    return beaconEnd + static_cast<std::int64_t>(slot - 1) * slotTime + slotGuard;
}

void TdmaSchedule::validate(SimTime beaconAirtime) const
{
    if (beaconPeriod <= kTimeZero || slotTime <= kTimeZero)
        throw ConfigError("[tdma] beacon period and slot time must be positive");
    if (slotGuard < kTimeZero || wakeLead < kTimeZero)
        throw ConfigError("[tdma] slot guard and wake lead must not be negative");
    std::set<std::uint32_t> used;
    for (const auto& [node, slot] : slotOf) {
        if (slot == 0)
            throw ConfigError("[tdma] slot indices start at 1 (node " + std::to_string(node) + ")");
        if (!used.insert(slot).second)
            throw ConfigError("[tdma] slot " + std::to_string(slot) + " is assigned twice");
    }
    const SimTime needed = static_cast<std::int64_t>(slotCount()) * slotTime + beaconAirtime;
    if (needed > beaconPeriod) {
        throw ConfigError("[tdma] schedule overflow: " + std::to_string(slotCount()) + " slots of " +
                          std::to_string(toSeconds(slotTime)) + " s plus " +
                          std::to_string(toSeconds(beaconAirtime)) +
                          " s beacon airtime exceed the " + std::to_string(toSeconds(beaconPeriod)) +
                          " s beacon period");
    }
}

BaseStationFirmware::BaseStationFirmware(NodeId id, BaseStationSettings settings)
    : id_(id), settings_(std::move(settings))
{
}

RadioState BaseStationFirmware::initialRadioState() const
{
    return settings_.beaconEnabled ? RadioState::Idle : RadioState::Rx;
}

std::vector<FirmwareAction> BaseStationFirmware::boot() const
{
    if (!settings_.beaconEnabled)
        return {};
    return {action::Schedule{EventKind::BeaconDue, kTimeZero, 0}};
}

std::vector<FirmwareAction> BaseStationFirmware::step(const FirmwareInput& in)
{
    const TdmaSchedule& sched = settings_.schedule;
    switch (in.trigger) {
    case Trigger::BeaconDue:
        round_ = nextRound_++;
        return {action::Schedule{EventKind::BeaconDue, in.now + sched.beaconPeriod, 0},
                action::SetRadio{RadioState::Idle},
                action::RunTask{TaskId::BeaconPrep, settings_.beaconPrep.executionTime}};

    case Trigger::TaskDone:
        if (static_cast<TaskId>(in.ref) != TaskId::BeaconPrep)
            return {};
        ++beaconsSent_;
        return {action::Transmit{Packet{kBroadcastAddress, PacketType::Beacon,
                                        u16Payload(static_cast<std::uint16_t>(round_))}}};

    case Trigger::TxOver: {
        std::vector<FirmwareAction> out{action::SetRadio{RadioState::Rx}};
        if (settings_.listen == ListenMode::Window) {
            const SimTime windowEnd = in.now + sched.slotGuard +
                                      static_cast<std::int64_t>(sched.slotCount()) * sched.slotTime;
            out.push_back(action::Schedule{EventKind::ModeSwitch, windowEnd,
                                           static_cast<std::uint64_t>(settings_.interRoundState)});
        }
        return out;
    }

    case Trigger::PacketReceived: {
        if (in.packet == nullptr || in.packet->packet.type != PacketType::Data)
            return {};
        const auto round = readU16(in.packet->packet.payload).value_or(0);
        return {action::LogRssi{
            RssiLogRecord{in.now, id_, in.packet->packet.address, in.packet->rssiDbm, round}}};
    }

    case Trigger::SlotDue:
    case Trigger::WaypointHop:
        return {};
    }
    return {};
}

SensorFirmware::SensorFirmware(NodeId id, SensorSettings settings)
    : id_(id), settings_(std::move(settings))
{
}

RadioState SensorFirmware::initialRadioState() const
{
    return settings_.trigger == TxTrigger::Beacon ? RadioState::Rx : settings_.interRoundState;
}

std::vector<FirmwareAction> SensorFirmware::startSending(std::uint32_t round)
{
    if (sending_)
        throw SimulationError("node " + std::to_string(id_) +
                              " is still busy with its previous transmission: the schedule is "
                              "misconfigured");
    sending_ = true;
    round_ = round;
    return {action::SetRadio{RadioState::Idle},
            action::RunTask{TaskId::DataPrep, settings_.dataPrep.executionTime}};
}

std::vector<FirmwareAction> SensorFirmware::step(const FirmwareInput& in)
{
    const TdmaSchedule& sched = settings_.schedule;
    switch (in.trigger) {
    case Trigger::PacketReceived: {
        if (settings_.trigger != TxTrigger::Beacon || in.packet == nullptr ||
            in.packet->packet.type != PacketType::Beacon)
            return {};
        const auto round = readU16(in.packet->packet.payload).value_or(0);
        const SimTime slotAt = sched.slotStart(in.now, settings_.slot) + settings_.slotOffset;
        if (slotAt < in.now)
            throw SimulationError("node " + std::to_string(id_) + ": slot offset moves the slot "
                                  "before the end of the beacon");
        nextWake_ = in.packet->frameStart + sched.beaconPeriod - sched.wakeLead;
        return {action::Schedule{EventKind::SlotDue, slotAt, round},
                action::SetRadio{settings_.interRoundState}};
    }

    case Trigger::SlotDue:
        return startSending(static_cast<std::uint32_t>(in.ref));

    case Trigger::WaypointHop:
        if (settings_.trigger != TxTrigger::Waypoint)
            return {};
        return startSending(static_cast<std::uint32_t>(in.ref));

    case Trigger::TaskDone:
        if (static_cast<TaskId>(in.ref) != TaskId::DataPrep)
            return {};
        return {action::Transmit{Packet{static_cast<std::uint8_t>(id_), PacketType::Data,
                                        u16Payload(static_cast<std::uint16_t>(round_))}}};

    case Trigger::TxOver: {
        sending_ = false;
        std::vector<FirmwareAction> out{action::SetRadio{settings_.interRoundState}};
        if (settings_.trigger == TxTrigger::Beacon) {
            out.push_back(action::Schedule{EventKind::ModeSwitch, std::max(in.now, nextWake_),
                                           static_cast<std::uint64_t>(RadioState::Rx)});
        }
        return out;
    }

    case Trigger::BeaconDue:
        return {};
    }
    return {};
}

} // namespace wsnsim
