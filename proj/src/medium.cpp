#include "wsnsim/medium.hpp"

#include "wsnsim/error.hpp"

#include <cmath>

namespace wsnsim {

namespace {

constexpr double kSpeedOfLight = 299'792'458.0;

} // namespace

std::string_view toString(PropagationDelay delay)
{
    return delay == PropagationDelay::Zero ? "zero" : "speed-of-light";
}

Medium::Medium(PropagationModel model, MediumConfig config)
    : model_(model), config_(config)
{
    model_.validate();
}

void Medium::attach(NodeId node, PositionFn position)
{
    nodes_[node] = std::move(position);
}

Vec2 Medium::positionOf(NodeId node, SimTime at) const
{
    auto it = nodes_.find(node);
    if (it == nodes_.end())
        throw SimulationError("node " + std::to_string(node) + " is not attached to the medium");
    return it->second(at);
}

const std::vector<Delivery>& Medium::broadcast(const AirFrame& frame, Simulator& sim)
{
    if (frame.duration <= kTimeZero)
        throw SimulationError("frame " + std::to_string(frame.id) + " has no airtime");

    const Vec2 senderPos = positionOf(frame.sender, frame.start);
    FrameRecord record{frame.id, frame.sender, frame.start, frame.end(), {}};
    InFlight flight{frame, {}};

    for (const auto& [node, position] : nodes_) {
        if (node == frame.sender)
            continue;
        const Vec2 rxPos = position(frame.start);
        const double power = receivedPowerDbm(frame.txPowerDbm, senderPos, rxPos, model_);
        if (power < config_.sensitivityCutoffDbm)
            continue;
        SimTime delay{};
        if (config_.propagationDelay == PropagationDelay::SpeedOfLight)
            delay = SimTime{std::llround(distance(senderPos, rxPos) / kSpeedOfLight * 1e9)};
        const Delivery d{node, power, frame.start + delay, frame.end() + delay};
        sim.schedule(d.start, node, EventKind::FrameStart, frame.id);
        sim.schedule(d.end, node, EventKind::FrameEnd, frame.id);
        flight.rxPowerDbm.emplace(node, power);
        record.deliveries.push_back(d);
    }

    if (!flight.rxPowerDbm.empty())
        inFlight_.emplace(frame.id, std::move(flight));
    log_.push_back(std::move(record));
    return log_.back().deliveries;
}

const AirFrame& Medium::frame(FrameId id) const
{
    auto it = inFlight_.find(id);
    if (it == inFlight_.end())
        throw SimulationError("frame " + std::to_string(id) + " is not in flight");
    return it->second.frame;
}

double Medium::rxPowerDbm(FrameId id, NodeId receiver) const
{
    auto it = inFlight_.find(id);
    if (it == inFlight_.end())
        throw SimulationError("frame " + std::to_string(id) + " is not in flight");
    auto rx = it->second.rxPowerDbm.find(receiver);
    if (rx == it->second.rxPowerDbm.end())
        throw SimulationError("frame " + std::to_string(id) + " was not delivered to node " +
                              std::to_string(receiver));
    return rx->second;
}

void Medium::release(FrameId id, NodeId receiver)
{
    auto it = inFlight_.find(id);
    if (it == inFlight_.end())
        return;
    it->second.rxPowerDbm.erase(receiver);
    if (it->second.rxPowerDbm.empty())
        inFlight_.erase(it);
}

} // namespace wsnsim
