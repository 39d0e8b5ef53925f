#pragma once

#include "wsnsim/energy.hpp"
#include "wsnsim/firmware.hpp"
#include "wsnsim/medium.hpp"
#include "wsnsim/mobility.hpp"
#include "wsnsim/propagation.hpp"
#include "wsnsim/radio.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wsnsim {

enum class NodeRole : std::uint8_t { Base, Sensor };

std::string_view toString(NodeRole role);

struct NodeConfig {
    NodeId id = 0;
    NodeRole role = NodeRole::Sensor;
    MobilityModel mobility = StaticMobility{};
    std::optional<std::uint32_t> slot;  // beacon-triggered sensors; filled in at load
    SimTime slotOffset{};
    TxTrigger trigger = TxTrigger::Beacon;
};

/// Complete, validated description of one run.
struct ScenarioConfig {
    std::string name = "custom";
    bool reproduction = false;
    double playgroundWidthM = 100.0;
    double playgroundHeightM = 100.0;
    std::uint64_t seed = 1;
    SimTime until = std::chrono::seconds{10};

    std::vector<NodeConfig> nodes;

    RadioConfig radio;
    PropagationModel propagation;
    MediumConfig medium;

    PowerTable power = PowerTable::placeholder();
    bool powerIsPlaceholder = true;

    TdmaSchedule tdma;
    bool beaconEnabled = true;
    ListenMode baseListen = ListenMode::Window;
    RadioState interRoundState = RadioState::Sleep;

    FirmwareTask beaconPrep{"beacon-prep", {}};
    FirmwareTask dataPrep{"data-prep", {}};

    SimTime energySampleInterval = std::chrono::seconds{1};

    const NodeConfig& base() const;
    /// Throws ConfigError naming the offending section.
    void validate() const;
};

/// Parses the `[section]` / `key = value` format. Errors name the section and line.
ScenarioConfig parseConfig(std::string_view text, std::string_view sourceName = "<config>");
ScenarioConfig loadConfig(const std::filesystem::path& path);

/// Effective configuration with every default spelled out; parses back to the same config.
std::string serializeConfig(const ScenarioConfig& config);

/// Built-in preset text ("static" or "mobile"); throws ConfigError for other names.
std::string presetConfig(std::string_view name);

} // namespace wsnsim
