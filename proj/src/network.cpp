#include "wsnsim/network.hpp"

#include "wsnsim/error.hpp"

#include <type_traits>

namespace wsnsim {

namespace {

// ModeSwitch ref that launches a frame waiting for the transceiver to settle in Tx.
constexpr std::uint64_t kLaunchPendingFrame = 0x100;

std::uint8_t raw(RadioState s)
{
    return static_cast<std::uint8_t>(s);
}

std::uint8_t raw(CpuState s)
{
    return static_cast<std::uint8_t>(s);
}

} // namespace

Network::Network(ScenarioConfig config)
    : config_(std::move(config)),
      medium_(config_.propagation, config_.medium),
      ledger_(config_.power)
{
    config_.validate();

    for (const auto& nc : config_.nodes) {
        Firmware firmware = [&]() -> Firmware {
            if (nc.role == NodeRole::Base) {
                BaseStationSettings s;
                s.schedule = config_.tdma;
                s.beaconEnabled = config_.beaconEnabled;
                s.listen = config_.baseListen;
                s.interRoundState = config_.interRoundState;
                s.beaconPrep = config_.beaconPrep;
                return BaseStationFirmware(nc.id, s);
            }
            SensorSettings s;
            s.schedule = config_.tdma;
            s.slot = nc.slot.value_or(0);
            s.slotOffset = nc.slotOffset;
            s.trigger = nc.trigger;
            s.interRoundState = config_.interRoundState;
            s.dataPrep = config_.dataPrep;
            return SensorFirmware(nc.id, s);
        }();
        const RadioState initial =
            std::visit([](const auto& fw) { return fw.initialRadioState(); }, firmware);

        const NodeId id = nc.id;
        auto listener = [this, id](RadioState s, SimTime at) {
            ledger_.notifyStateChange(id, Component::Radio, raw(s), at);
        };
        auto n = std::make_unique<Node>(Node{nc, Mobility(nc.mobility, id),
                                             Radio(id, config_.radio, initial, listener),
                                             std::move(firmware), RandomStream(config_.seed, id),
                                             std::nullopt});
        const Mobility* mob = &n->mobility;
        medium_.attach(id, [mob](SimTime t) { return mob->positionAt(t); });
        ledger_.addComponent(id, Component::Radio, raw(initial), kTimeZero);
        ledger_.addComponent(id, Component::Cpu, raw(CpuState::Sleep), kTimeZero);
        nodes_.emplace(id, std::move(n));
    }
}

const Mobility& Network::mobility(NodeId id) const
{
    auto it = nodes_.find(id);
    if (it == nodes_.end())
        throw SimulationError("unknown node " + std::to_string(id));
    return it->second->mobility;
}

Network::Node& Network::node(NodeId id)
{
    auto it = nodes_.find(id);
    if (it == nodes_.end())
        throw SimulationError("event for unknown node " + std::to_string(id));
    return *it->second;
}

RunResult Network::run()
{
    if (ran_)
        throw SimulationError("a network runs once");
    ran_ = true;

    for (auto& [id, n] : nodes_) {
        execute(*n, std::visit([](const auto& fw) { return fw.boot(); }, n->firmware));
        if (const auto* track = n->mobility.track())
            sim_.schedule(track->arrival(0), id, EventKind::WaypointHop, 0);
    }

    const RunSummary loop = sim_.run(config_.until, [this](const Event& ev) { dispatch(ev); });

    RunResult result;
    result.summary = counters_;
    result.summary.eventsDispatched = loop.eventsDispatched;
    result.summary.endTime = loop.endTime;
    result.rssiLog = std::move(rssiLog_);
    result.energy = ledger_.report(config_.until);
    result.stateTrace = ledger_.trace();
    result.frames = medium_.frameLog();

    std::vector<SimTime> samples;
    for (SimTime t{}; t <= config_.until; t += config_.energySampleInterval)
        samples.push_back(t);
    result.energyTimeline = energyTimeline(result.stateTrace, config_.power, samples);
    return result;
}

void Network::dispatch(const Event& ev)
{
    Node& n = node(ev.target);
    const SimTime now = ev.time;
    switch (ev.kind) {
    case EventKind::FrameStart:
        onFrameStart(n, ev);
        break;
    case EventKind::FrameEnd:
        onFrameEnd(n, ev);
        break;
    case EventKind::TxOver:
        n.radio.endTransmission(now);
        feed(n, {Trigger::TxOver, now, ev.ref, nullptr});
        break;
    case EventKind::BeaconDue:
        feed(n, {Trigger::BeaconDue, now, ev.ref, nullptr});
        break;
    case EventKind::SlotDue:
        feed(n, {Trigger::SlotDue, now, ev.ref, nullptr});
        break;
    case EventKind::TaskDone:
        setCpu(n, CpuState::Sleep);
        feed(n, {Trigger::TaskDone, now, ev.ref, nullptr});
        break;
    case EventKind::WaypointHop:
        if (const auto* track = n.mobility.track())
            sim_.schedule(track->arrival(ev.ref + 1), n.config.id, EventKind::WaypointHop, ev.ref + 1);
        feed(n, {Trigger::WaypointHop, now, ev.ref, nullptr});
        break;
    case EventKind::ModeSwitch:
        if (ev.ref == kLaunchPendingFrame) {
            if (!n.pendingFrame)
                throw SimulationError("no frame waiting for the transmitter");
            const AirFrame frame = std::move(*n.pendingFrame);
            n.pendingFrame.reset();
            launch(n, frame);
        } else {
            n.radio.switchTo(static_cast<RadioState>(ev.ref), now);
            sim_.annotate(std::string("radio=") + std::string(toString(n.radio.state())));
        }
        break;
    }
}

void Network::onFrameStart(Node& n, const Event& ev)
{
    const AirFrame& frame = medium_.frame(ev.ref);
    const double power = medium_.rxPowerDbm(ev.ref, n.config.id);
    const auto& rec =
        n.radio.decider().onFrameStart(frame, power, n.radio.readyToReceive(ev.time), ev.time);
    sim_.annotate("frame=" + std::to_string(frame.id) + (rec.locked ? " locked" : " interference"));
}

void Network::onFrameEnd(Node& n, const Event& ev)
{
    ReceptionRecord rec = n.radio.decider().onFrameEnd(ev.ref, ev.time);
    medium_.release(ev.ref, n.config.id);
    if (rec.locked && !rec.aborted)
        drawBitErrors(rec, config_.radio.modulation, n.rng);
    ReceptionOutcome outcome = finalizeReception(rec, config_.radio.rssiResolutionDb);

    std::optional<Packet> packet;
    if (const auto* decoded = std::get_if<DecodedFrame>(&outcome)) {
        packet = decodePacket(decoded->bytes);
        if (!packet)
            outcome = DropReason::CrcFail;
    }

    if (observer_)
        observer_(n.config.id, rec, outcome);

    if (const auto* reason = std::get_if<DropReason>(&outcome)) {
        if (*reason != DropReason::NotLocked)
            ++counters_.framesDropped;
        sim_.annotate("frame=" + std::to_string(rec.frame.id) + " drop=" + std::string(toString(*reason)));
        return;
    }

    const auto& decoded = std::get<DecodedFrame>(outcome);
    ++counters_.framesReceived;
    sim_.annotate("frame=" + std::to_string(rec.frame.id) + " decoded");
    const ReceivedPacket received{*packet, decoded.rssiDbm, decoded.frameStart};
    feed(n, {Trigger::PacketReceived, ev.time, 0, &received});
}

void Network::feed(Node& n, const FirmwareInput& in)
{
    auto actions = std::visit([&](auto& fw) { return fw.step(in); }, n.firmware);
    execute(n, actions);
}

void Network::execute(Node& n, const std::vector<FirmwareAction>& actions)
{
    const SimTime now = sim_.now();
    for (const auto& a : actions) {
        std::visit(
            [&](const auto& act) {
                using T = std::decay_t<decltype(act)>;
                if constexpr (std::is_same_v<T, action::RunTask>) {
                    setCpu(n, CpuState::Active);
                    sim_.schedule(now + act.duration, n.config.id, EventKind::TaskDone,
                                  static_cast<std::uint64_t>(act.task));
                } else if constexpr (std::is_same_v<T, action::Transmit>) {
                    AirFrame frame = n.radio.beginTransmission(nextFrameId_++, encodePacket(act.packet), now);
                    if (frame.start == now) {
                        launch(n, frame);
                    } else {
                        sim_.schedule(frame.start, n.config.id, EventKind::ModeSwitch, kLaunchPendingFrame);
                        n.pendingFrame = std::move(frame);
                    }
                } else if constexpr (std::is_same_v<T, action::Schedule>) {
                    sim_.schedule(act.at, n.config.id, act.kind, act.ref);
                } else if constexpr (std::is_same_v<T, action::SetRadio>) {
                    n.radio.switchTo(act.state, now);
                } else if constexpr (std::is_same_v<T, action::LogRssi>) {
                    rssiLog_.push_back(act.record);
                }
            },
            a);
    }
}

void Network::launch(Node& n, const AirFrame& frame)
{
    medium_.broadcast(frame, sim_);
    sim_.schedule(frame.end(), n.config.id, EventKind::TxOver, frame.id);
    ++counters_.framesSent;
}

void Network::setCpu(Node& n, CpuState state)
{
    ledger_.notifyStateChange(n.config.id, Component::Cpu, raw(state), sim_.now());
}

} // namespace wsnsim
