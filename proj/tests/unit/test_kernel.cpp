#include <doctest.h>

#include <wsnsim/error.hpp>
#include <wsnsim/kernel.hpp>

#include <sstream>
#include <vector>

using namespace wsnsim;
using namespace std::chrono_literals;

TEST_CASE("events dispatch in time order, ties by insertion")
{
    Simulator sim;
    sim.schedule(SimTime{30}, 1, EventKind::SlotDue, 3);
    sim.schedule(SimTime{10}, 1, EventKind::SlotDue, 1);
    sim.schedule(SimTime{30}, 2, EventKind::SlotDue, 4);
    sim.schedule(SimTime{20}, 1, EventKind::SlotDue, 2);

    std::vector<std::uint64_t> order;
    auto summary = sim.run(SimTime{100}, [&](const Event& ev) { order.push_back(ev.ref); });
    CHECK(order == std::vector<std::uint64_t>{1, 2, 3, 4});
    CHECK(summary.eventsDispatched == 4);
    CHECK(summary.endTime == SimTime{30});
}

TEST_CASE("horizon is exclusive")
{
    Simulator sim;
    int beacons = 0;
    sim.schedule(kTimeZero, 0, EventKind::BeaconDue);
    auto summary = sim.run(10s, [&](const Event& ev) {
        ++beacons;
        sim.schedule(ev.time + 1s, 0, EventKind::BeaconDue);
    });
    CHECK(beacons == 10);
    CHECK(summary.endTime == 10s);
    CHECK(sim.pending() == 1);
}

TEST_CASE("empty queue ends at the last dispatch")
{
    Simulator sim;
    sim.schedule(SimTime{5}, 0, EventKind::TaskDone);
    auto summary = sim.run(1s, [](const Event&) {});
    CHECK(summary.endTime == SimTime{5});

    Simulator idle;
    CHECK(idle.run(1s, [](const Event&) {}).endTime == kTimeZero);
}

TEST_CASE("cancelled events are skipped")
{
    Simulator sim;
    auto h = sim.schedule(SimTime{5}, 0, EventKind::TaskDone, 1);
    sim.schedule(SimTime{6}, 0, EventKind::TaskDone, 2);
    sim.cancel(h);
    std::vector<std::uint64_t> seen;
    sim.run(1s, [&](const Event& ev) { seen.push_back(ev.ref); });
    CHECK(seen == std::vector<std::uint64_t>{2});
}

TEST_CASE("scheduling in the past throws")
{
    Simulator sim;
    sim.schedule(SimTime{10}, 0, EventKind::TaskDone);
    CHECK_THROWS_AS(sim.run(1s,
                            [&](const Event&) { sim.schedule(SimTime{5}, 0, EventKind::TaskDone); }),
                    SimulationError);
}

TEST_CASE("same-time scheduling from a handler runs in the same instant")
{
    Simulator sim;
    sim.schedule(SimTime{10}, 0, EventKind::TaskDone, 1);
    std::vector<std::pair<std::int64_t, std::uint64_t>> seen;
    sim.run(1s, [&](const Event& ev) {
        seen.emplace_back(ev.time.count(), ev.ref);
        if (ev.ref == 1)
            sim.schedule(ev.time, 0, EventKind::TaskDone, 2);
    });
    REQUIRE(seen.size() == 2);
    CHECK(seen[1] == std::pair<std::int64_t, std::uint64_t>{10, 2});
}

TEST_CASE("handler faults carry event context")
{
    Simulator sim;
    sim.schedule(SimTime{42}, 7, EventKind::FrameEnd);
    try {
        sim.run(1s, [](const Event&) { throw std::runtime_error("boom"); });
        FAIL("expected a throw");
    } catch (const SimulationError& e) {
        const std::string what = e.what();
        CHECK(what.find("42") != std::string::npos);
        CHECK(what.find("frame-end") != std::string::npos);
        CHECK(what.find("boom") != std::string::npos);
    }
}

TEST_CASE("trace lines")
{
    Simulator sim;
    std::ostringstream out;
    sim.setTrace(&out);
    sim.schedule(SimTime{3}, 4, EventKind::SlotDue);
    sim.run(1s, [&](const Event&) {
        sim.annotate("a");
        sim.annotate("b");
    });
    CHECK(out.str() == "time_ns,seq,target,kind,note\n3,0,4,slot-due,a;b\n");
}
