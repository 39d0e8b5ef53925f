#pragma once

#include "wsnsim/geometry.hpp"
#include "wsnsim/kernel.hpp"
#include "wsnsim/sim_time.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

namespace wsnsim {

struct StaticMobility {
    Vec2 position;
};

enum class MovementMode : std::uint8_t { Discrete, Continuous };

std::string_view toString(MovementMode mode);

/// Anti-clockwise laps around an axis-aligned rectangle, starting at `origin`
/// (the lower-left corner) and heading along +x.
struct RectangleMobility {
    Vec2 origin;
    double width = 80.0;
    double height = 40.0;
    std::uint32_t waypointCount = 19;
    double speedMps = 10.0;
    MovementMode mode = MovementMode::Discrete;
    /// When set, all waypoints shift forward along the perimeter by a uniform
    /// draw from [0, maxStartOffsetM).
    std::optional<std::uint64_t> startOffsetSeed;
    double maxStartOffsetM = 1.0;

    double perimeter() const { return 2.0 * (width + height); }
    void validate() const;
};

using MobilityModel = std::variant<StaticMobility, RectangleMobility>;

struct Waypoint {
    std::uint64_t index = 0;
    Vec2 position;
    SimTime arrival{};
};

/// Precomputed rectangle walk.
///
/// Waypoints sit at equal arc-length spacing; arrival k happens at
/// round(k * spacing / speed) ns. In discrete mode the node jumps to a waypoint at
/// its arrival instant and stays there; in continuous mode it moves linearly along
/// the perimeter, and both modes agree exactly at every arrival instant.
class RectangleTrack {
public:
    /// `streamKey` separates the start-offset draws of different nodes.
    RectangleTrack(const RectangleMobility& model, std::uint64_t streamKey);

    SimTime arrival(std::uint64_t k) const;
    /// Waypoint k, wrapping cyclically.
    Vec2 waypoint(std::uint64_t k) const;
    /// One lap of waypoints with their arrival times.
    std::vector<Waypoint> schedule() const;
    Vec2 positionAt(SimTime t) const;
    Vec2 pointAtArc(double arcM) const;
    double startOffset() const { return offset_; }

private:
    std::uint64_t lastArrivedBy(SimTime t) const;

    RectangleMobility model_;
    double spacing_;
    double offset_ = 0.0;
};

/// Position source for one node.
class Mobility {
public:
    Mobility(MobilityModel model, std::uint64_t streamKey);

    Vec2 positionAt(SimTime t) const;
    const MobilityModel& model() const { return model_; }
    /// Null for static nodes.
    const RectangleTrack* track() const { return track_ ? &*track_ : nullptr; }

private:
    MobilityModel model_;
    std::optional<RectangleTrack> track_;
};

/// Waypoint schedule of a rectangle walk without a start offset key (key 0).
std::vector<Waypoint> waypointSchedule(const RectangleMobility& model);

Vec2 positionAt(const MobilityModel& model, SimTime t);

} // namespace wsnsim
