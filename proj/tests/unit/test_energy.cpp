#include <doctest.h>

#include "oracles.hpp"

#include <wsnsim/energy.hpp>
#include <wsnsim/error.hpp>
#include <wsnsim/radio.hpp>
#include <wsnsim/rng.hpp>

#include <cmath>

using namespace wsnsim;
using namespace std::chrono_literals;

namespace {

std::uint8_t u8(RadioState s)
{
    return static_cast<std::uint8_t>(s);
}

std::map<std::pair<int, int>, double> oracleTable(const PowerTable& table)
{
    std::map<std::pair<int, int>, double> out;
    for (const auto& [cs, mw] : table.entries())
        out[{static_cast<int>(cs.component), cs.state}] = mw;
    return out;
}

std::vector<oracle::Change> oracleTrace(const std::vector<StateChange>& trace)
{
    std::vector<oracle::Change> out;
    for (const auto& c : trace)
        out.push_back({c.node, static_cast<int>(c.component), c.state, c.at.count()});
    return out;
}

} // namespace

TEST_CASE("component state keys")
{
    CHECK(parseComponentState("radio.tx") == ComponentState{Component::Radio, u8(RadioState::Tx)});
    CHECK(parseComponentState("cpu.active") ==
          ComponentState{Component::Cpu, static_cast<std::uint8_t>(CpuState::Active)});
    CHECK_FALSE(parseComponentState("radio.off").has_value());
    CHECK_FALSE(parseComponentState("gps.on").has_value());
    CHECK(allComponentStates().size() == 6);
    for (auto cs : allComponentStates())
        CHECK(parseComponentState(std::string(toString(cs.component)) + "." + stateName(cs)) == cs);
}

TEST_CASE("power table validation")
{
    CHECK_NOTHROW(PowerTable::placeholder().validate());
    PowerTable partial;
    partial.set({Component::Radio, u8(RadioState::Rx)}, 10.0);
    CHECK_THROWS_AS(partial.validate(), ConfigError);
    CHECK_THROWS_AS(partial.powerMw({Component::Radio, u8(RadioState::Tx)}), ConfigError);
    PowerTable negative = PowerTable::placeholder();
    negative.set({Component::Cpu, 0}, -1.0);
    CHECK_THROWS_AS(negative.validate(), ConfigError);
}

TEST_CASE("hand-computed residency")
{
    PowerTable table;
    table.set({Component::Radio, u8(RadioState::Sleep)}, 1.0);
    table.set({Component::Radio, u8(RadioState::Idle)}, 2.0);
    table.set({Component::Radio, u8(RadioState::Rx)}, 10.0);
    table.set({Component::Radio, u8(RadioState::Tx)}, 20.0);
    EnergyLedger ledger(table);
    ledger.addComponent(1, Component::Radio, u8(RadioState::Sleep), 0s);
    ledger.notifyStateChange(1, Component::Radio, u8(RadioState::Rx), 1s);
    ledger.notifyStateChange(1, Component::Radio, u8(RadioState::Tx), 3s);
    auto report = ledger.report(4s);
    REQUIRE(report.size() == 1);
    // 1 mW * 1 s + 10 mW * 2 s + 20 mW * 1 s = 41 mJ
    CHECK(report[0].totalJoules == doctest::Approx(0.041).epsilon(1e-15));
    CHECK(ledger.energyJoules(1, {Component::Radio, u8(RadioState::Rx)}) == doctest::Approx(0.020));
    CHECK(ledger.currentState(1, Component::Radio) == u8(RadioState::Tx));
    CHECK(report[0].breakdown.size() == 4);
}

TEST_CASE("time regression and unknown states are rejected")
{
    EnergyLedger ledger(PowerTable::placeholder());
    ledger.addComponent(1, Component::Radio, u8(RadioState::Idle), 5s);
    CHECK_THROWS_AS(ledger.notifyStateChange(1, Component::Radio, u8(RadioState::Rx), 4s), SimulationError);
    CHECK_THROWS_AS(ledger.notifyStateChange(1, Component::Radio, 9, 6s), ConfigError);
    CHECK_THROWS_AS(ledger.notifyStateChange(2, Component::Radio, u8(RadioState::Rx), 6s), SimulationError);
}

TEST_CASE("zero-length residencies contribute nothing")
{
    EnergyLedger ledger(PowerTable::placeholder());
    ledger.addComponent(1, Component::Radio, u8(RadioState::Idle), 0s);
    ledger.notifyStateChange(1, Component::Radio, u8(RadioState::Tx), 1s);
    ledger.notifyStateChange(1, Component::Radio, u8(RadioState::Idle), 1s);
    ledger.report(2s);
    CHECK(ledger.energyJoules(1, {Component::Radio, u8(RadioState::Tx)}) == 0.0);
}

TEST_CASE("random traces match the replay oracle")
{
    RandomStream rng(2024, 7);
    const PowerTable table = PowerTable::placeholder();
    for (int trial = 0; trial < 20; ++trial) {
        EnergyLedger ledger(table);
        std::int64_t t[3] = {0, 0, 0};
        for (NodeId n = 0; n < 3; ++n) {
            ledger.addComponent(n, Component::Radio, u8(RadioState::Sleep), 0ns);
            ledger.addComponent(n, Component::Cpu, 0, 0ns);
        }
        for (int i = 0; i < 2000; ++i) {
            const NodeId n = static_cast<NodeId>(rng.uniform() * 3.0);
            t[n] += static_cast<std::int64_t>(rng.uniform() * 1e8);
            if (rng.uniform() < 0.7)
                ledger.notifyStateChange(n, Component::Radio, static_cast<std::uint8_t>(rng.uniform() * 4.0),
                                         SimTime{t[n]});
            else
                ledger.notifyStateChange(n, Component::Cpu, static_cast<std::uint8_t>(rng.uniform() * 2.0),
                                         SimTime{t[n]});
        }
        const std::int64_t horizon = std::max({t[0], t[1], t[2]}) + 1;
        auto report = ledger.report(SimTime{horizon});
        auto expected = oracle::replayEnergy(oracleTrace(ledger.trace()), oracleTable(table), horizon);
        for (const auto& ne : report) {
            const long double want = expected.at(ne.node);
            CHECK(std::abs(static_cast<long double>(ne.totalJoules) - want) / want < 1e-12L);
        }
    }
}

TEST_CASE("compensated sum keeps small terms")
{
    CompensatedSum s;
    s.add(1.0);
    for (int i = 0; i < 1000; ++i)
        s.add(1e-17);
    CHECK(s.value() == doctest::Approx(1.0 + 1e-14).epsilon(1e-16));
    CHECK(s.value() > 1.0);
}

TEST_CASE("energy timeline samples are cumulative")
{
    EnergyLedger ledger(PowerTable::placeholder());
    ledger.addComponent(1, Component::Radio, u8(RadioState::Rx), 0s);
    ledger.addComponent(1, Component::Cpu, 0, 0s);
    ledger.notifyStateChange(1, Component::Radio, u8(RadioState::Sleep), 2s);
    const auto samples = energyTimeline(ledger.trace(), ledger.powerTable(), {0s, 1s, 2s, 4s});
    REQUIRE(samples.size() == 4);
    CHECK(samples[0].joules == 0.0);
    const double rx = 46.8e-3;
    const double cpuSleep = 0.006e-3;
    CHECK(samples[1].joules == doctest::Approx(rx + cpuSleep));
    CHECK(samples[3].joules == doctest::Approx(2 * rx + 2 * 0.0012e-3 + 4 * cpuSleep));
    const auto report = ledger.report(4s);
    CHECK(samples[3].joules == doctest::Approx(report[0].totalJoules).epsilon(1e-14));
}
