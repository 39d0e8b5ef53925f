#include "wsnsim/scenario.hpp"

#include "wsnsim/error.hpp"
#include "wsnsim/rng.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace wsnsim {

namespace fs = std::filesystem;

std::string fixed(double value, int decimals)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
    std::string s(buf);
    if (s.starts_with('-') && s.find_first_not_of("-0.") == std::string::npos)
        s.erase(0, 1);  // no "-0.000"
    return s;
}

std::string formatRssi(double dbm)
{
    std::string s = fixed(dbm, 3);
    s.erase(s.find_last_not_of('0') + 1);
    if (s.back() == '.')
        s.pop_back();
    return s;
}

std::string formatRssiLog(const std::vector<RssiLogRecord>& log)
{
    std::ostringstream o;
    o << "time_s,base_id,sender_id,rssi_dbm,round\n";
    for (const auto& r : log) {
        o << fixed(toSeconds(r.time), 6) << ',' << r.baseId << ',' << r.senderId << ','
          << formatRssi(r.rssiDbm) << ',' << r.round << '\n';
    }
    return o.str();
}

std::string formatEnergyReport(const std::vector<NodeEnergy>& energy)
{
    std::ostringstream o;
    o << "node_id,component,state,energy_mj\n";
    for (const auto& n : energy) {
        for (const auto& e : n.breakdown) {
            o << n.node << ',' << toString(e.state.component) << ',' << stateName(e.state) << ','
              << fixed(e.joules * 1e3, 9) << '\n';
        }
        o << n.node << ",total,all," << fixed(n.totalJoules * 1e3, 9) << '\n';
    }
    return o.str();
}

std::string formatEnergyTimeline(const std::vector<EnergySample>& samples)
{
    std::ostringstream o;
    o << "time_s,node_id,energy_mj\n";
    for (const auto& s : samples)
        o << fixed(toSeconds(s.at), 6) << ',' << s.node << ',' << fixed(s.joules * 1e3, 9) << '\n';
    return o.str();
}

std::string formatFrameTrace(const std::vector<FrameRecord>& frames)
{
    std::ostringstream o;
    o << "frame_id,sender,start_ns,end_ns,receivers\n";
    for (const auto& f : frames) {
        o << f.id << ',' << f.sender << ',' << f.start.count() << ',' << f.end.count() << ','
          << f.deliveries.size() << '\n';
    }
    return o.str();
}

std::string formatRssiByPosition(const ScenarioConfig& config, const std::vector<RssiLogRecord>& log)
{
    std::set<NodeId> movers;
    for (const auto& n : config.nodes) {
        if (n.trigger == TxTrigger::Waypoint && n.role == NodeRole::Sensor)
            movers.insert(n.id);
    }
    std::ostringstream o;
    o << "node_id,position_index,rssi_dbm\n";
    for (const auto& r : log) {
        if (movers.contains(r.senderId))
            o << r.senderId << ',' << r.round << ',' << formatRssi(r.rssiDbm) << '\n';
    }
    return o.str();
}

std::string formatRunMeta(const ScenarioConfig& config, const RunResult& result)
{
    std::ostringstream o;
    o << "# wsnsim " << kVersion << "\n"
      << "# rng: " << kRngAlgorithm << "\n"
      << "# power table: " << (config.powerIsPlaceholder ? "placeholder" : "configured") << "\n"
      << "# events dispatched: " << result.summary.eventsDispatched << "\n"
      << "# frames sent: " << result.summary.framesSent << "\n"
      << "# frames received: " << result.summary.framesReceived << "\n"
      << "# frames dropped: " << result.summary.framesDropped << "\n"
      << "# end time ns: " << result.summary.endTime.count() << "\n\n"
      << serializeConfig(config);
    return o.str();
}

namespace {

/// Files created by a run; removed again unless the run commits.
class OutputSet {
public:
    explicit OutputSet(fs::path dir) : dir_(std::move(dir)) {}
    OutputSet(const OutputSet&) = delete;
    OutputSet& operator=(const OutputSet&) = delete;
    ~OutputSet()
    {
        if (committed_)
            return;
        std::error_code ec;
        for (const auto& p : created_)
            fs::remove(p, ec);
    }

    std::ofstream open(const std::string& name)
    {
        const fs::path p = dir_ / name;
        std::ofstream out(p, std::ios::binary | std::ios::trunc);
        if (!out)
            throw OutputError("cannot write " + p.string());
        created_.push_back(p);
        return out;
    }

    void write(const std::string& name, const std::string& content)
    {
        auto out = open(name);
        out << content;
        if (!out)
            throw OutputError("failed writing " + (dir_ / name).string());
    }

    void commit() { committed_ = true; }

private:
    fs::path dir_;
    std::vector<fs::path> created_;
    bool committed_ = false;
};

} // namespace

RunResult runScenario(const ScenarioConfig& config, const fs::path& outDir, RunOptions options)
{
    std::error_code ec;
    fs::create_directories(outDir, ec);
    if (ec || !fs::is_directory(outDir))
        throw OutputError("cannot create output directory " + outDir.string());

    OutputSet outputs(outDir);
    outputs.write("run_meta.ini", serializeConfig(config));  // probe writability before running

    Network network(config);
    std::ofstream trace;
    if (options.trace) {
        trace = outputs.open("event_trace.csv");
        network.setTrace(&trace);
    }

    RunResult result = network.run();

    if (options.trace) {
        trace.flush();
        if (!trace)
            throw OutputError("failed writing event trace");
        outputs.write("frame_trace.csv", formatFrameTrace(result.frames));
    }
    outputs.write("rssi_log.csv", formatRssiLog(result.rssiLog));
    outputs.write("energy_report.csv", formatEnergyReport(result.energy));
    outputs.write("energy_timeline.csv", formatEnergyTimeline(result.energyTimeline));
    const bool hasMovers = std::any_of(config.nodes.begin(), config.nodes.end(), [](const NodeConfig& n) {
        return n.trigger == TxTrigger::Waypoint;
    });
    if (hasMovers)
        outputs.write("rssi_by_position.csv", formatRssiByPosition(config, result.rssiLog));
    outputs.write("run_meta.ini", formatRunMeta(config, result));
    outputs.commit();
    return result;
}

} // namespace wsnsim
