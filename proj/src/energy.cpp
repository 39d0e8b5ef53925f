#include "wsnsim/energy.hpp"

#include "wsnsim/error.hpp"
#include "wsnsim/radio.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace wsnsim {

namespace {

double joulesFor(double milliwatts, SimTime dt)
{
    return milliwatts * 1e-3 * static_cast<double>(dt.count()) * 1e-9;
}

} // namespace

std::string_view toString(Component component)
{
    return component == Component::Radio ? "radio" : "cpu";
}

std::string_view toString(CpuState state)
{
    return state == CpuState::Sleep ? "sleep" : "active";
}

std::string stateName(ComponentState cs)
{
    if (cs.component == Component::Radio)
        return std::string(toString(static_cast<RadioState>(cs.state)));
    return std::string(toString(static_cast<CpuState>(cs.state)));
}

std::vector<ComponentState> allComponentStates()
{
    std::vector<ComponentState> all;
    for (auto s : {RadioState::Sleep, RadioState::Idle, RadioState::Rx, RadioState::Tx})
        all.push_back({Component::Radio, static_cast<std::uint8_t>(s)});
    for (auto s : {CpuState::Sleep, CpuState::Active})
        all.push_back({Component::Cpu, static_cast<std::uint8_t>(s)});
    return all;
}

std::optional<ComponentState> parseComponentState(std::string_view key)
{
    for (const auto& cs : allComponentStates()) {
        if (std::string(toString(cs.component)) + "." + stateName(cs) == key)
            return cs;
    }
    return std::nullopt;
}

void PowerTable::set(ComponentState cs, double milliwatts)
{
    table_[cs] = milliwatts;
}

double PowerTable::powerMw(ComponentState cs) const
{
    auto it = table_.find(cs);
    if (it == table_.end())
        throw ConfigError("no power entry for " + std::string(toString(cs.component)) + "." +
                          stateName(cs));
    return it->second;
}

void PowerTable::validate() const
{
    for (const auto& cs : allComponentStates()) {
        const std::string key = std::string(toString(cs.component)) + "." + stateName(cs);
        auto it = table_.find(cs);
        if (it == table_.end())
            throw ConfigError("[power] is missing " + key);
        if (!(it->second >= 0.0) || !std::isfinite(it->second))
            throw ConfigError("[power] " + key + " must be a non-negative number of mW");
    }
}

PowerTable PowerTable::placeholder()
{
    // Rough 3 V transceiver/microcontroller magnitudes, for smoke runs only.
    PowerTable t;
    t.set({Component::Radio, static_cast<std::uint8_t>(RadioState::Sleep)}, 0.0012);
    t.set({Component::Radio, static_cast<std::uint8_t>(RadioState::Idle)}, 4.5);
    t.set({Component::Radio, static_cast<std::uint8_t>(RadioState::Rx)}, 46.8);
    t.set({Component::Radio, static_cast<std::uint8_t>(RadioState::Tx)}, 63.6);
    t.set({Component::Cpu, static_cast<std::uint8_t>(CpuState::Sleep)}, 0.006);
    t.set({Component::Cpu, static_cast<std::uint8_t>(CpuState::Active)}, 1.2);
    return t;
}

void CompensatedSum::add(double x)
{
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
        compensation_ += (sum_ - t) + x;
    else
        compensation_ += (x - t) + sum_;
    sum_ = t;
}

EnergyLedger::EnergyLedger(PowerTable table) : table_(std::move(table)) {}

void EnergyLedger::addComponent(NodeId node, Component component, std::uint8_t initial, SimTime at)
{
    table_.powerMw({component, initial});
    timelines_[{node, component}] = Timeline{initial, at};
    trace_.push_back(StateChange{node, component, initial, at});
}

void EnergyLedger::accrue(NodeId node, Component component, Timeline& tl, SimTime at)
{
    if (at < tl.lastChange) {
        throw SimulationError("energy timeline of node " + std::to_string(node) + " " +
                              std::string(toString(component)) + " went back from " +
                              std::to_string(tl.lastChange.count()) + " to " +
                              std::to_string(at.count()) + " ns");
    }
    const ComponentState cs{component, tl.state};
    energy_[{node, cs}].add(joulesFor(table_.powerMw(cs), at - tl.lastChange));
    tl.lastChange = at;
}

void EnergyLedger::notifyStateChange(NodeId node, Component component, std::uint8_t newState,
                                     SimTime at)
{
    auto it = timelines_.find({node, component});
    if (it == timelines_.end())
        throw SimulationError("node " + std::to_string(node) + " has no " +
                              std::string(toString(component)) + " timeline");
    table_.powerMw({component, newState});
    accrue(node, component, it->second, at);
    it->second.state = newState;
    trace_.push_back(StateChange{node, component, newState, at});
}

std::vector<NodeEnergy> EnergyLedger::report(SimTime horizon)
{
    std::set<NodeId> nodes;
    for (auto& [key, tl] : timelines_) {
        accrue(key.first, key.second, tl, horizon);
        nodes.insert(key.first);
    }

    std::vector<NodeEnergy> out;
    for (NodeId node : nodes) {
        NodeEnergy ne{node, 0.0, {}};
        CompensatedSum total;
        for (const auto& [cs, mw] : table_.entries()) {
            if (!timelines_.contains({node, cs.component}))
                continue;
            const double j = energyJoules(node, cs);
            ne.breakdown.push_back({cs, j});
            total.add(j);
        }
        ne.totalJoules = total.value();
        out.push_back(std::move(ne));
    }
    return out;
}

double EnergyLedger::energyJoules(NodeId node, ComponentState cs) const
{
    auto it = energy_.find({node, cs});
    return it == energy_.end() ? 0.0 : it->second.value();
}

std::uint8_t EnergyLedger::currentState(NodeId node, Component component) const
{
    auto it = timelines_.find({node, component});
    if (it == timelines_.end())
        throw SimulationError("node " + std::to_string(node) + " has no " +
                              std::string(toString(component)) + " timeline");
    return it->second.state;
}

std::vector<EnergySample> energyTimeline(const std::vector<StateChange>& trace,
                                         const PowerTable& table,
                                         const std::vector<SimTime>& sampleTimes)
{
    std::vector<StateChange> changes = trace;
    std::stable_sort(changes.begin(), changes.end(),
                     [](const StateChange& a, const StateChange& b) { return a.at < b.at; });
    std::vector<SimTime> samples = sampleTimes;
    std::sort(samples.begin(), samples.end());

    struct Open {
        std::uint8_t state = 0;
        SimTime since{};
        CompensatedSum closed;
    };
    std::map<std::pair<NodeId, Component>, Open> open;
    std::set<NodeId> nodes;

    std::vector<EnergySample> out;
    std::size_t next = 0;
    for (SimTime t : samples) {
        for (; next < changes.size() && changes[next].at <= t; ++next) {
            const auto& c = changes[next];
            auto [it, fresh] = open.try_emplace({c.node, c.component});
            if (!fresh) {
                it->second.closed.add(
                    joulesFor(table.powerMw({c.component, it->second.state}), c.at - it->second.since));
            }
            it->second.state = c.state;
            it->second.since = c.at;
            nodes.insert(c.node);
        }
        for (NodeId node : nodes) {
            CompensatedSum sum;
            for (auto component : {Component::Radio, Component::Cpu}) {
                auto it = open.find({node, component});
                if (it == open.end())
                    continue;
                sum.add(it->second.closed.value());
                sum.add(joulesFor(table.powerMw({component, it->second.state}), t - it->second.since));
            }
            out.push_back({t, node, sum.value()});
        }
    }
    return out;
}

} // namespace wsnsim
