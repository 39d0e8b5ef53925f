#include "wsnsim/radio.hpp"

#include "wsnsim/error.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace wsnsim {

std::string_view toString(RadioState state)
{
    switch (state) {
    case RadioState::Sleep: return "sleep";
    case RadioState::Idle: return "idle";
    case RadioState::Rx: return "rx";
    case RadioState::Tx: return "tx";
    }
    return "unknown";
}

std::optional<RadioState> radioStateFromString(std::string_view name)
{
    for (auto s : {RadioState::Sleep, RadioState::Idle, RadioState::Rx, RadioState::Tx}) {
        if (toString(s) == name)
            return s;
    }
    return std::nullopt;
}

SimTime RadioConfig::transitionTime(RadioState from, RadioState to) const
{
    auto it = transitionTimes.find({from, to});
    return it == transitionTimes.end() ? kTimeZero : it->second;
}

void RadioConfig::validate() const
{
    if (!(datarateBaud > 0.0))
        throw std::invalid_argument("datarate must be positive");
    if (!(rssiResolutionDb > 0.0))
        throw std::invalid_argument("RSSI resolution must be positive");
    if (bitsPerSymbol != 1)
        throw std::invalid_argument("2-FSK carries one bit per symbol");
    for (const auto& [edge, duration] : transitionTimes) {
        const auto [from, to] = edge;
        const bool direct = from == RadioState::Idle || to == RadioState::Idle;
        if (!direct || from == to)
            throw std::invalid_argument("no direct radio transition " + std::string(toString(from)) +
                                        " -> " + std::string(toString(to)));
        if (duration < kTimeZero)
            throw std::invalid_argument("negative radio transition time");
    }
}

Radio::Radio(NodeId node, RadioConfig config, RadioState initial, StateListener listener)
    : node_(node),
      config_(std::move(config)),
      state_(initial),
      decider_(config_.noiseFloorDbm),
      listener_(std::move(listener))
{
}

bool Radio::readyToReceive(SimTime now) const
{
    return state_ == RadioState::Rx && now >= readyAt_;
}

void Radio::enter(RadioState next, SimTime now)
{
    if (state_ == RadioState::Rx && next != RadioState::Rx)
        decider_.abortLock();
    state_ = next;
    if (listener_)
        listener_(next, now);
}

SimTime Radio::switchTo(RadioState target, SimTime now)
{
    if (target == state_)
        return std::max(now, readyAt_);
    if (transmitting_)
        throw SimulationError("node " + std::to_string(node_) + ": radio state change to " +
                              std::string(toString(target)) + " during a transmission");

    SimTime settle{};
    if (state_ != RadioState::Idle && target != RadioState::Idle) {
        settle += config_.transitionTime(state_, RadioState::Idle);
        enter(RadioState::Idle, now);
    }
    settle += config_.transitionTime(state_, target);
    enter(target, now);
    // A transition requested before the previous one settled queues behind it.
    readyAt_ = std::max(now, readyAt_) + settle;
    return readyAt_;
}

AirFrame Radio::beginTransmission(FrameId id, std::vector<std::uint8_t> bytes, SimTime now)
{
    if (transmitting_)
        throw SimulationError("node " + std::to_string(node_) + " is already transmitting");
    if (state_ == RadioState::Sleep)
        throw SimulationError("node " + std::to_string(node_) + " cannot transmit while asleep");
    if (bytes.size() != config_.layout.codedBytes())
        throw SimulationError("node " + std::to_string(node_) + ": packet of " +
                              std::to_string(bytes.size()) + " bytes does not match the " +
                              std::to_string(config_.layout.codedBytes()) + "-byte frame layout");

    const SimTime start = switchTo(RadioState::Tx, now);
    transmitting_ = true;

    AirFrame frame;
    frame.id = id;
    frame.sender = node_;
    frame.txPowerDbm = config_.txPowerDbm;
    frame.start = start;
    frame.duration = frameDuration(config_.layout, config_.datarateBaud);
    frame.datarateBaud = config_.datarateBaud;
    frame.layout = config_.layout;
    frame.bytes = std::move(bytes);
    return frame;
}

void Radio::endTransmission(SimTime now)
{
    if (!transmitting_)
        throw SimulationError("node " + std::to_string(node_) + ": TX_OVER without a transmission");
    transmitting_ = false;
    switchTo(RadioState::Idle, now);
}

} // namespace wsnsim
