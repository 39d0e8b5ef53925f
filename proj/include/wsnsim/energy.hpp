#pragma once

#include "wsnsim/kernel.hpp"
#include "wsnsim/sim_time.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wsnsim {

enum class Component : std::uint8_t { Radio, Cpu };

enum class CpuState : std::uint8_t { Sleep, Active };

std::string_view toString(Component component);
std::string_view toString(CpuState state);

/// State of one component; `state` holds a RadioState or CpuState value.
struct ComponentState {
    Component component = Component::Radio;
    std::uint8_t state = 0;

    friend auto operator<=>(const ComponentState&, const ComponentState&) = default;
};

std::string stateName(ComponentState cs);
/// Parses "radio.tx", "cpu.active", ...
std::optional<ComponentState> parseComponentState(std::string_view key);
/// Every (component, state) pair a node can reach.
std::vector<ComponentState> allComponentStates();

/// Power draw in mW per (component, state).
class PowerTable {
public:
    void set(ComponentState cs, double milliwatts);
    /// Throws ConfigError for pairs without an entry.
    double powerMw(ComponentState cs) const;
    bool has(ComponentState cs) const { return table_.contains(cs); }
    const std::map<ComponentState, double>& entries() const { return table_; }

    /// Throws ConfigError when a reachable pair is missing or negative.
    void validate() const;

    /// Illustrative numbers only; not measured hardware values.
    static PowerTable placeholder();

private:
    std::map<ComponentState, double> table_;
};

/// Neumaier compensated sum.
class CompensatedSum {
public:
    void add(double x);
    double value() const { return sum_ + compensation_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

struct StateChange {
    NodeId node = 0;
    Component component = Component::Radio;
    std::uint8_t state = 0;
    SimTime at{};
};

struct EnergyEntry {
    ComponentState state;
    double joules = 0.0;
};

struct NodeEnergy {
    NodeId node = 0;
    double totalJoules = 0.0;
    std::vector<EnergyEntry> breakdown;  // every table entry, zero residency included
};

/// Integrates power over state residency, per node and component.
class EnergyLedger {
public:
    explicit EnergyLedger(PowerTable table);

    /// Starts the timeline of a component in `initial` at `at`.
    void addComponent(NodeId node, Component component, std::uint8_t initial, SimTime at);

    /// Bills the old state for [lastChange, at) and switches to `newState`.
    /// Unknown pairs raise ConfigError, time regression raises SimulationError.
    void notifyStateChange(NodeId node, Component component, std::uint8_t newState, SimTime at);

    /// Closes all open intervals at `horizon` and returns per-node totals.
    std::vector<NodeEnergy> report(SimTime horizon);

    double energyJoules(NodeId node, ComponentState cs) const;
    std::uint8_t currentState(NodeId node, Component component) const;

    /// Every initial state and change in notification order.
    const std::vector<StateChange>& trace() const { return trace_; }
    const PowerTable& powerTable() const { return table_; }

private:
    struct Timeline {
        std::uint8_t state = 0;
        SimTime lastChange{};
    };

    void accrue(NodeId node, Component component, Timeline& tl, SimTime at);

    PowerTable table_;
    std::map<std::pair<NodeId, Component>, Timeline> timelines_;
    std::map<std::pair<NodeId, ComponentState>, CompensatedSum> energy_;
    std::vector<StateChange> trace_;
};

/// Cumulative energy of each node at the sample instants, integrated from a state trace.
struct EnergySample {
    SimTime at{};
    NodeId node = 0;
    double joules = 0.0;
};

std::vector<EnergySample> energyTimeline(const std::vector<StateChange>& trace,
                                         const PowerTable& table,
                                         const std::vector<SimTime>& sampleTimes);

} // namespace wsnsim
