#pragma once

#include "wsnsim/frame.hpp"
#include "wsnsim/geometry.hpp"
#include "wsnsim/kernel.hpp"
#include "wsnsim/propagation.hpp"

#include <functional>
#include <map>
#include <string_view>
#include <vector>

namespace wsnsim {

enum class PropagationDelay : std::uint8_t { Zero, SpeedOfLight };

std::string_view toString(PropagationDelay delay);

struct MediumConfig {
    double sensitivityCutoffDbm = -110.0;
    PropagationDelay propagationDelay = PropagationDelay::Zero;
};

struct Delivery {
    NodeId receiver = 0;
    double rxPowerDbm = 0.0;
    SimTime start{};
    SimTime end{};
};

/// Every frame ever put on the air, with the receivers it reached.
struct FrameRecord {
    FrameId id = 0;
    NodeId sender = 0;
    SimTime start{};
    SimTime end{};
    std::vector<Delivery> deliveries;
};

/// Shared radio channel.
///
/// Positions are sampled once at frame start and the received power is held for
/// the whole frame. broadcast() schedules a frame-start and a frame-end event at
/// every receiver whose power clears the sensitivity cutoff; receivers below the
/// cutoff never learn the frame existed.
class Medium {
public:
    using PositionFn = std::function<Vec2(SimTime)>;

    Medium(PropagationModel model, MediumConfig config);

    void attach(NodeId node, PositionFn position);
    Vec2 positionOf(NodeId node, SimTime at) const;

    const std::vector<Delivery>& broadcast(const AirFrame& frame, Simulator& sim);

    /// Frame still referenced by at least one receiver that has not seen its end.
    const AirFrame& frame(FrameId id) const;
    double rxPowerDbm(FrameId id, NodeId receiver) const;
    /// Called once per receiver after it processed the frame-end event.
    void release(FrameId id, NodeId receiver);

    const std::vector<FrameRecord>& frameLog() const { return log_; }
    const PropagationModel& model() const { return model_; }
    const MediumConfig& config() const { return config_; }

private:
    struct InFlight {
        AirFrame frame;
        std::map<NodeId, double> rxPowerDbm;
    };

    PropagationModel model_;
    MediumConfig config_;
    std::map<NodeId, PositionFn> nodes_;
    std::map<FrameId, InFlight> inFlight_;
    std::vector<FrameRecord> log_;
};

} // namespace wsnsim
