#include "wsnsim/kernel.hpp"

#include "wsnsim/error.hpp"

#include <ostream>

namespace wsnsim {

std::string_view toString(EventKind kind)
{
    switch (kind) {
    case EventKind::FrameStart: return "frame-start";
    case EventKind::FrameEnd: return "frame-end";
    case EventKind::TxOver: return "tx-over";
    case EventKind::BeaconDue: return "beacon-due";
    case EventKind::SlotDue: return "slot-due";
    case EventKind::TaskDone: return "task-done";
    case EventKind::WaypointHop: return "waypoint-hop";
    case EventKind::ModeSwitch: return "mode-switch";
    }
    return "unknown";
}

const Event* EventQueue::peek()
{
    while (!heap_.empty()) {
        auto it = cancelled_.find(heap_.top().seq);
        if (it == cancelled_.end())
            return &heap_.top();
        cancelled_.erase(it);
        heap_.pop();
    }
    return nullptr;
}

Event EventQueue::pop()
{
    const Event* next = peek();
    if (next == nullptr)
        throw SimulationError("pop from empty event queue");
    Event ev = *next;
    heap_.pop();
    return ev;
}

EventHandle Simulator::schedule(SimTime at, NodeId target, EventKind kind, std::uint64_t ref)
{
    if (at < now_) {
        throw SimulationError("cannot schedule " + std::string(toString(kind)) + " for node " +
                              std::to_string(target) + " at " + std::to_string(at.count()) +
                              " ns, simulation time is already " + std::to_string(now_.count()) +
                              " ns");
    }
    Event ev{at, nextSeq_++, target, kind, ref};
    queue_.push(ev);
    return EventHandle{ev.seq};
}

RunSummary Simulator::run(SimTime until, const Handler& handler)
{
    RunSummary summary;
    while (const Event* next = queue_.peek()) {
        if (next->time >= until)
            break;
        const Event ev = queue_.pop();
        now_ = ev.time;
        note_.clear();
        try {
            handler(ev);
        } catch (const std::exception& e) {
            throw SimulationError("fault at t=" + std::to_string(ev.time.count()) + " ns, node " +
                                  std::to_string(ev.target) + ", event " +
                                  std::string(toString(ev.kind)) + " (seq " +
                                  std::to_string(ev.seq) + "): " + e.what());
        }
        ++summary.eventsDispatched;
        if (trace_ != nullptr) {
            *trace_ << ev.time.count() << ',' << ev.seq << ',' << ev.target << ','
                    << toString(ev.kind) << ',' << note_ << '\n';
        }
    }
    // Time only advances to the horizon if something is still waiting beyond it.
    if (queue_.peek() != nullptr && until > now_)
        now_ = until;
    summary.endTime = now_;
    return summary;
}

void Simulator::setTrace(std::ostream* out)
{
    trace_ = out;
    if (trace_ != nullptr)
        *trace_ << "time_ns,seq,target,kind,note\n";
}

void Simulator::annotate(std::string note)
{
    if (!note_.empty())
        note_ += ';';
    note_ += std::move(note);
}

} // namespace wsnsim
