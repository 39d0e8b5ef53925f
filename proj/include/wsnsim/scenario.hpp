#pragma once

#include "wsnsim/config.hpp"
#include "wsnsim/network.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wsnsim {

inline constexpr std::string_view kVersion = "0.1.0";

/// Output directory cannot be used.
class OutputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunOptions {
    bool trace = false;  // event_trace.csv and frame_trace.csv
};

/// Runs the scenario and writes into `outDir`:
///   rssi_log.csv, energy_report.csv, energy_timeline.csv, run_meta.ini,
///   rssi_by_position.csv (only with waypoint-triggered nodes),
///   event_trace.csv and frame_trace.csv (only with RunOptions::trace).
/// Outputs depend only on the configuration and seed. If the run faults, every
/// file it created is removed before the exception propagates.
RunResult runScenario(const ScenarioConfig& config, const std::filesystem::path& outDir,
                      RunOptions options = {});

std::string formatRssiLog(const std::vector<RssiLogRecord>& log);
std::string formatEnergyReport(const std::vector<NodeEnergy>& energy);
std::string formatEnergyTimeline(const std::vector<EnergySample>& samples);
std::string formatFrameTrace(const std::vector<FrameRecord>& frames);
/// Rows of (node, waypoint index, RSSI) for waypoint-triggered senders.
std::string formatRssiByPosition(const ScenarioConfig& config, const std::vector<RssiLogRecord>& log);
std::string formatRunMeta(const ScenarioConfig& config, const RunResult& result);

/// Fixed-decimal rendering used by every CSV file.
std::string fixed(double value, int decimals);
/// RSSI without trailing zeros ("-74", "-74.5").
std::string formatRssi(double dbm);

} // namespace wsnsim
