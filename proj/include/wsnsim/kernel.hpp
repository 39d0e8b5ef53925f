#pragma once

#include "wsnsim/sim_time.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <queue>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace wsnsim {

using NodeId = std::uint32_t;

enum class EventKind : std::uint8_t {
    FrameStart,
    FrameEnd,
    TxOver,
    BeaconDue,
    SlotDue,
    TaskDone,
    WaypointHop,
    ModeSwitch,
};

std::string_view toString(EventKind kind);

struct Event {
    SimTime time{};
    std::uint64_t seq = 0;
    NodeId target = 0;
    EventKind kind = EventKind::BeaconDue;
    std::uint64_t ref = 0;  // kind-specific: frame id, task id, waypoint index, radio state
};

struct EventHandle {
    std::uint64_t seq = 0;
};

struct RunSummary {
    std::uint64_t eventsDispatched = 0;
    SimTime endTime{};
    std::uint64_t framesSent = 0;
    std::uint64_t framesReceived = 0;
    std::uint64_t framesDropped = 0;
};

/// Future event list. Pops in (time, seq) order; cancelled events are skipped lazily.
class EventQueue {
public:
    void push(const Event& ev) { heap_.push(ev); }
    void cancel(std::uint64_t seq) { cancelled_.insert(seq); }

    /// Next live event, or nullptr when the queue is exhausted.
    const Event* peek();
    Event pop();
    bool empty() { return peek() == nullptr; }
    std::size_t size() const { return heap_.size() - cancelled_.size(); }

private:
    struct Later {
        bool operator()(const Event& a, const Event& b) const
        {
            if (a.time != b.time)
                return a.time > b.time;
            return a.seq > b.seq;
        }
    };
    std::priority_queue<Event, std::vector<Event>, Later> heap_;
    std::unordered_set<std::uint64_t> cancelled_;
};

/// Single-threaded discrete-event loop.
///
/// The kernel knows nothing about radios or firmware; a run dispatches every event
/// to one handler, which is free to schedule further events. Events at or beyond the
/// horizon passed to run() stay queued, so the dispatched window is [now, until).
class Simulator {
public:
    using Handler = std::function<void(const Event&)>;

    SimTime now() const { return now_; }

    /// Throws SimulationError when `at` lies in the past.
    EventHandle schedule(SimTime at, NodeId target, EventKind kind, std::uint64_t ref = 0);
    void cancel(EventHandle handle) { queue_.cancel(handle.seq); }
    std::size_t pending() const { return queue_.size(); }

    RunSummary run(SimTime until, const Handler& handler);

    /// Dispatch trace sink, one CSV line per event: time_ns,seq,target,kind,note.
    void setTrace(std::ostream* out);
    /// Attach a note to the trace line of the event currently being dispatched.
    void annotate(std::string note);

private:
    EventQueue queue_;
    SimTime now_{};
    std::uint64_t nextSeq_ = 0;
    std::ostream* trace_ = nullptr;
    std::string note_;
};

} // namespace wsnsim
