#include <doctest.h>

#include <wsnsim/error.hpp>
#include <wsnsim/radio.hpp>

#include <vector>

using namespace wsnsim;
using namespace std::chrono_literals;

namespace {

struct Recorder {
    std::vector<std::pair<RadioState, SimTime>> hops;
    Radio::StateListener listener()
    {
        return [this](RadioState s, SimTime t) { hops.emplace_back(s, t); };
    }
};

RadioConfig withTransitions()
{
    RadioConfig cfg;
    cfg.transitionTimes[{RadioState::Sleep, RadioState::Idle}] = 2ms;
    cfg.transitionTimes[{RadioState::Idle, RadioState::Rx}] = 300us;
    cfg.transitionTimes[{RadioState::Idle, RadioState::Tx}] = 500us;
    return cfg;
}

} // namespace

TEST_CASE("state names round-trip")
{
    for (auto s : {RadioState::Sleep, RadioState::Idle, RadioState::Rx, RadioState::Tx})
        CHECK(radioStateFromString(toString(s)) == s);
    CHECK_FALSE(radioStateFromString("off").has_value());
}

TEST_CASE("indirect switches route through idle")
{
    Recorder rec;
    Radio radio(1, withTransitions(), RadioState::Sleep, rec.listener());
    const SimTime ready = radio.switchTo(RadioState::Rx, 10ms);
    CHECK(ready == 10ms + 2ms + 300us);
    REQUIRE(rec.hops.size() == 2);
    CHECK(rec.hops[0] == std::pair{RadioState::Idle, SimTime{10ms}});
    CHECK(rec.hops[1] == std::pair{RadioState::Rx, SimTime{10ms}});
    CHECK_FALSE(radio.readyToReceive(12ms));
    CHECK(radio.readyToReceive(ready));
}

TEST_CASE("zero transition times make states usable at once")
{
    Radio radio(1, RadioConfig{}, RadioState::Sleep);
    CHECK(radio.switchTo(RadioState::Rx, 5ms) == 5ms);
    CHECK(radio.readyToReceive(5ms));
    CHECK(radio.switchTo(RadioState::Rx, 6ms) == 6ms);
}

TEST_CASE("transmission lifecycle")
{
    Radio radio(3, withTransitions(), RadioState::Idle);
    auto frame = radio.beginTransmission(11, std::vector<std::uint8_t>(7, 0), 1ms);
    CHECK(radio.state() == RadioState::Tx);
    CHECK(radio.transmitting());
    CHECK(frame.start == 1ms + 500us);
    CHECK(frame.duration == 50ms);
    CHECK(frame.sender == 3);
    CHECK(frame.txPowerDbm == 1.0);

    CHECK_THROWS_AS(radio.beginTransmission(12, std::vector<std::uint8_t>(7, 0), 2ms), SimulationError);
    CHECK_THROWS_AS(radio.switchTo(RadioState::Rx, 2ms), SimulationError);

    radio.endTransmission(frame.end());
    CHECK(radio.state() == RadioState::Idle);
    CHECK_FALSE(radio.transmitting());
    CHECK_THROWS_AS(radio.endTransmission(frame.end()), SimulationError);
}

TEST_CASE("transmission preconditions")
{
    Radio asleep(1, RadioConfig{}, RadioState::Sleep);
    CHECK_THROWS_AS(asleep.beginTransmission(1, std::vector<std::uint8_t>(7, 0), 0ms), SimulationError);
    Radio idle(1, RadioConfig{}, RadioState::Idle);
    CHECK_THROWS_AS(idle.beginTransmission(1, std::vector<std::uint8_t>(6, 0), 0ms), SimulationError);
}

TEST_CASE("leaving rx aborts the lock")
{
    Radio radio(1, RadioConfig{}, RadioState::Rx);
    AirFrame f;
    f.id = 4;
    f.duration = 50ms;
    radio.decider().onFrameStart(f, -70.0, radio.readyToReceive(0ms), 0ms);
    CHECK(radio.decider().lockedFrame() == FrameId{4});
    radio.switchTo(RadioState::Sleep, 10ms);
    CHECK_FALSE(radio.decider().lockedFrame().has_value());
    CHECK(radio.decider().onFrameEnd(4, 50ms).aborted);
}

TEST_CASE("config validation")
{
    RadioConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.transitionTimes[{RadioState::Sleep, RadioState::Rx}] = 1ms;
    CHECK_THROWS(cfg.validate());
    RadioConfig rate;
    rate.datarateBaud = 0.0;
    CHECK_THROWS(rate.validate());
    RadioConfig bps;
    bps.bitsPerSymbol = 2;
    CHECK_THROWS(bps.validate());
}
