#include "wsnsim/mobility.hpp"

#include "wsnsim/rng.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wsnsim {

std::string_view toString(MovementMode mode)
{
    return mode == MovementMode::Discrete ? "discrete" : "continuous";
}

void RectangleMobility::validate() const
{
    if (!(width > 0.0) || !(height > 0.0))
        throw std::invalid_argument("rectangle width and height must be positive");
    if (waypointCount < 2)
        throw std::invalid_argument("a rectangle walk needs at least two waypoints");
    if (!(speedMps > 0.0))
        throw std::invalid_argument("speed must be positive");
    if (!(maxStartOffsetM >= 0.0))
        throw std::invalid_argument("start offset bound must be non-negative");
}

RectangleTrack::RectangleTrack(const RectangleMobility& model, std::uint64_t streamKey)
    : model_(model), spacing_(model.perimeter() / model.waypointCount)
{
    model_.validate();
    if (model_.startOffsetSeed) {
        RandomStream rng(*model_.startOffsetSeed, streamKey);
        offset_ = rng.uniform() * model_.maxStartOffsetM;
    }
}

SimTime RectangleTrack::arrival(std::uint64_t k) const
{
    const long double seconds = static_cast<long double>(k) * model_.perimeter() /
                                (static_cast<long double>(model_.waypointCount) * model_.speedMps);
    return SimTime{std::llround(seconds * 1'000'000'000.0L)};
}

Vec2 RectangleTrack::waypoint(std::uint64_t k) const
{
    return pointAtArc(offset_ + static_cast<double>(k % model_.waypointCount) * spacing_);
}

std::vector<Waypoint> RectangleTrack::schedule() const
{
    std::vector<Waypoint> out;
    out.reserve(model_.waypointCount);
    for (std::uint64_t k = 0; k < model_.waypointCount; ++k)
        out.push_back({k, waypoint(k), arrival(k)});
    return out;
}

Vec2 RectangleTrack::pointAtArc(double arcM) const
{
    const double w = model_.width;
    const double h = model_.height;
    double s = std::fmod(arcM, model_.perimeter());
    if (s < 0.0)
        s += model_.perimeter();
    const Vec2 o = model_.origin;
    if (s < w)
        return {o.x + s, o.y};
    s -= w;
    if (s < h)
        return {o.x + w, o.y + s};
    s -= h;
    if (s < w)
        return {o.x + w - s, o.y + h};
    s -= w;
    return {o.x, o.y + h - s};
}

std::uint64_t RectangleTrack::lastArrivedBy(SimTime t) const
{
    const long double estimate = static_cast<long double>(t.count()) * 1e-9L * model_.speedMps /
                             static_cast<long double>(spacing_);
    auto k = static_cast<std::uint64_t>(std::max<long double>(0.0L, std::floor(estimate)));
    while (k > 0 && arrival(k) > t)
        --k;
    while (arrival(k + 1) <= t)
        ++k;
    return k;
}

Vec2 RectangleTrack::positionAt(SimTime t) const
{
    if (t <= kTimeZero)
        return waypoint(0);
    const std::uint64_t k = lastArrivedBy(t);
    const SimTime from = arrival(k);
    if (model_.mode == MovementMode::Discrete || t == from)
        return waypoint(k);
    const SimTime to = arrival(k + 1);
    const double fraction =
        static_cast<double>((t - from).count()) / static_cast<double>((to - from).count());
    const double arc = offset_ + (static_cast<double>(k % model_.waypointCount) + fraction) * spacing_;
    return pointAtArc(arc);
}

Mobility::Mobility(MobilityModel model, std::uint64_t streamKey) : model_(std::move(model))
{
    if (const auto* rect = std::get_if<RectangleMobility>(&model_))
        track_.emplace(*rect, streamKey);
}

Vec2 Mobility::positionAt(SimTime t) const
{
    if (track_)
        return track_->positionAt(t);
    return std::get<StaticMobility>(model_).position;
}

std::vector<Waypoint> waypointSchedule(const RectangleMobility& model)
{
    return RectangleTrack(model, 0).schedule();
}

Vec2 positionAt(const MobilityModel& model, SimTime t)
{
    return Mobility(model, 0).positionAt(t);
}

} // namespace wsnsim
