#pragma once

#include "wsnsim/config.hpp"
#include "wsnsim/decider.hpp"
#include "wsnsim/energy.hpp"
#include "wsnsim/firmware.hpp"
#include "wsnsim/kernel.hpp"
#include "wsnsim/medium.hpp"
#include "wsnsim/mobility.hpp"
#include "wsnsim/radio.hpp"
#include "wsnsim/rng.hpp"

#include <functional>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace wsnsim {

struct RunResult {
    /// framesReceived counts decoded receptions; framesDropped counts receptions a
    /// radio locked onto but lost (sync loss, CRC failure, abort). Frames a radio never
    /// locked onto are interference only and appear in neither.
    RunSummary summary;
    std::vector<RssiLogRecord> rssiLog;
    std::vector<NodeEnergy> energy;
    std::vector<StateChange> stateTrace;
    std::vector<FrameRecord> frames;
    std::vector<EnergySample> energyTimeline;
};

/// One simulation run: nodes, channel, energy ledger and event loop.
class Network {
public:
    using ReceptionObserver =
        std::function<void(NodeId receiver, const ReceptionRecord&, const ReceptionOutcome&)>;

    explicit Network(ScenarioConfig config);
    Network(const Network&) = delete;
    Network& operator=(const Network&) = delete;

    void setTrace(std::ostream* out) { sim_.setTrace(out); }
    void setReceptionObserver(ReceptionObserver observer) { observer_ = std::move(observer); }

    /// Runs to the configured horizon. Call once.
    RunResult run();

    const ScenarioConfig& config() const { return config_; }
    const Medium& medium() const { return medium_; }
    const Mobility& mobility(NodeId node) const;

private:
    struct Node {
        NodeConfig config;
        Mobility mobility;
        Radio radio;
        Firmware firmware;
        RandomStream rng;
        std::optional<AirFrame> pendingFrame;
    };

    void dispatch(const Event& ev);
    void onFrameStart(Node& node, const Event& ev);
    void onFrameEnd(Node& node, const Event& ev);
    void feed(Node& node, const FirmwareInput& in);
    void execute(Node& node, const std::vector<FirmwareAction>& actions);
    void launch(Node& node, const AirFrame& frame);
    void setCpu(Node& node, CpuState state);
    Node& node(NodeId id);

    ScenarioConfig config_;
    Simulator sim_;
    Medium medium_;
    EnergyLedger ledger_;
    std::map<NodeId, std::unique_ptr<Node>> nodes_;
    std::vector<RssiLogRecord> rssiLog_;
    ReceptionObserver observer_;
    FrameId nextFrameId_ = 1;
    RunSummary counters_;
    bool ran_ = false;
};

} // namespace wsnsim
