#pragma once

#include "wsnsim/decider.hpp"
#include "wsnsim/frame.hpp"
#include "wsnsim/kernel.hpp"
#include "wsnsim/sim_time.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace wsnsim {

enum class RadioState : std::uint8_t { Sleep, Idle, Rx, Tx };

inline constexpr std::size_t kRadioStateCount = 4;

std::string_view toString(RadioState state);
std::optional<RadioState> radioStateFromString(std::string_view name);

struct RadioConfig {
    double txPowerDbm = 1.0;
    double datarateBaud = 2400.0;
    Modulation modulation = Modulation::Fsk2;
    std::uint32_t bitsPerSymbol = 1;
    double noiseFloorDbm = -100.0;
    double rssiResolutionDb = 1.0;
    ByteLayout layout;
    /// Settling time per direct edge of the state graph; absent edges take 0 ns.
    std::map<std::pair<RadioState, RadioState>, SimTime> transitionTimes;

    SimTime transitionTime(RadioState from, RadioState to) const;
    void validate() const;
};

/// Transceiver state machine plus its decider.
///
/// Legal edges are Sleep-Idle, Idle-Rx and Idle-Tx; switchTo() routes any other
/// request through Idle and reports each hop to the listener. A new state is
/// entered (and billed) immediately but only becomes usable after the summed
/// transition time.
class Radio {
public:
    using StateListener = std::function<void(RadioState, SimTime)>;

    Radio(NodeId node, RadioConfig config, RadioState initial, StateListener listener = {});

    NodeId node() const { return node_; }
    RadioState state() const { return state_; }
    bool transmitting() const { return transmitting_; }
    /// In Rx and settled.
    bool readyToReceive(SimTime now) const;

    /// Returns the instant the target state is usable.
    SimTime switchTo(RadioState target, SimTime now);

    /// Moves to Tx and builds the frame; the frame starts once the radio has settled.
    /// Throws SimulationError when asleep or already transmitting.
    AirFrame beginTransmission(FrameId id, std::vector<std::uint8_t> bytes, SimTime now);
    /// TX_OVER: back to Idle.
    void endTransmission(SimTime now);

    Decider& decider() { return decider_; }
    const Decider& decider() const { return decider_; }
    const RadioConfig& config() const { return config_; }

private:
    void enter(RadioState next, SimTime now);

    NodeId node_;
    RadioConfig config_;
    RadioState state_;
    SimTime readyAt_{};
    bool transmitting_ = false;
    Decider decider_;
    StateListener listener_;
};

} // namespace wsnsim
