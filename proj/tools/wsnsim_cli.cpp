// Command-line front end: run a scenario file or print a built-in preset.

#include "wsnsim/config.hpp"
#include "wsnsim/error.hpp"
#include "wsnsim/scenario.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cstdint>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitRuntime = 2;

int runOne(const wsnsim::ScenarioConfig& config, const std::filesystem::path& out, bool trace,
           std::mutex& logMutex)
{
    try {
        const auto result = wsnsim::runScenario(config, out, {trace});
        std::lock_guard lock(logMutex);
        std::cout << out.string() << ": seed " << config.seed << ", "
                  << result.summary.eventsDispatched << " events, " << result.summary.framesSent
                  << " frames sent, " << result.summary.framesReceived << " received, "
                  << result.summary.framesDropped << " dropped, " << result.rssiLog.size()
                  << " RSSI records\n";
        return kExitOk;
    } catch (const wsnsim::ConfigError& e) {
        std::lock_guard lock(logMutex);
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::lock_guard lock(logMutex);
        std::cerr << "runtime fault: " << e.what() << '\n';
        return kExitRuntime;
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Energy-aware wireless sensor network simulator"};

    std::string configPath;
    std::vector<std::uint64_t> seeds;
    std::optional<double> untilSeconds;
    std::string outDir = "./out";
    bool trace = false;
    std::string preset;

    app.add_option("--config", configPath, "Scenario file")->check(CLI::ExistingFile);
    app.add_option("--seed", seeds, "Run seed; repeat for concurrent replications (overrides the file)");
    app.add_option("--until", untilSeconds, "Simulated seconds (overrides the file)")
        ->check(CLI::PositiveNumber);
    app.add_option("--out", outDir, "Output directory")->capture_default_str();
    app.add_flag("--trace", trace, "Write event_trace.csv and frame_trace.csv");
    app.add_option("--preset", preset, "Print a built-in scenario and exit")
        ->check(CLI::IsMember({"static", "mobile"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitConfig;
    }

    if (!preset.empty()) {
        std::cout << wsnsim::presetConfig(preset);
        return kExitOk;
    }
    if (configPath.empty()) {
        std::cerr << "--config is required (or --preset to print one)\n";
        return kExitConfig;
    }

    wsnsim::ScenarioConfig base;
    try {
        base = wsnsim::loadConfig(configPath);
        if (untilSeconds) {
            base.until = wsnsim::fromSeconds(*untilSeconds);
            base.validate();
        }
    } catch (const wsnsim::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    }

    std::mutex logMutex;
    if (seeds.size() <= 1) {
        if (!seeds.empty())
            base.seed = seeds.front();
        return runOne(base, outDir, trace, logMutex);
    }

    // One private config and output subdirectory per replication.
    std::atomic<int> worst{kExitOk};
    std::vector<std::jthread> workers;
    for (std::uint64_t seed : seeds) {
        workers.emplace_back([&, seed] {
            wsnsim::ScenarioConfig cfg = base;
            cfg.seed = seed;
            const int rc = runOne(cfg, std::filesystem::path(outDir) / ("seed_" + std::to_string(seed)),
                                  trace, logMutex);
            int prev = worst.load();
            while (rc > prev && !worst.compare_exchange_weak(prev, rc)) {
            }
        });
    }
    workers.clear();
    return worst.load();
}
