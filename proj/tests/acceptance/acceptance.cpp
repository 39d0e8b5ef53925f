// Acceptance checks. Prints one PASS/FAIL line per criterion and exits non-zero
// if any criterion fails.

#include "oracles.hpp"

#include <wsnsim/config.hpp>
#include <wsnsim/decider.hpp>
#include <wsnsim/network.hpp>
#include <wsnsim/propagation.hpp>
#include <wsnsim/rng.hpp>
#include <wsnsim/scenario.hpp>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>

using namespace wsnsim;
using namespace std::chrono_literals;
namespace fs = std::filesystem;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            if (!detail.empty())
                detail += "; ";
            detail += what;
        }
    }
};

int failures = 0;

void report(int id, const char* title, const std::function<Verdict()>& check)
{
    Verdict v;
    try {
        v = check();
    } catch (const std::exception& e) {
        v.pass = false;
        v.detail = std::string("exception: ") + e.what();
    }
    if (!v.pass)
        ++failures;
    std::printf("%s criterion %d: %s%s%s\n", v.pass ? "PASS" : "FAIL", id, title,
                v.detail.empty() ? "" : " -- ", v.detail.c_str());
    std::fflush(stdout);
}

double secondsSince(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v, int decimals = 6)
{
    std::ostringstream ss;
    ss.precision(decimals);
    ss << std::fixed << v;
    return ss.str();
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Vec2 staticPosition(const ScenarioConfig& cfg, NodeId id)
{
    for (const auto& n : cfg.nodes) {
        if (n.id == id)
            return std::get<StaticMobility>(n.mobility).position;
    }
    throw std::runtime_error("no node " + std::to_string(id));
}

// Rectangle waypoint k located by walking the corner list, independent of the track code.
Vec2 oracleWaypoint(const RectangleMobility& m, std::uint64_t k, double offset)
{
    double arc = std::fmod(offset + static_cast<double>(k % m.waypointCount) * m.perimeter() / m.waypointCount,
                           m.perimeter());
    const std::array<Vec2, 4> corners{m.origin, Vec2{m.origin.x + m.width, m.origin.y},
                                      Vec2{m.origin.x + m.width, m.origin.y + m.height},
                                      Vec2{m.origin.x, m.origin.y + m.height}};
    for (std::size_t i = 0; i < 4; ++i) {
        const Vec2 a = corners[i];
        const Vec2 b = corners[(i + 1) % 4];
        const double len = distance(a, b);
        if (arc < len)
            return {a.x + (b.x - a.x) * arc / len, a.y + (b.y - a.y) * arc / len};
        arc -= len;
    }
    return m.origin;
}

std::map<std::pair<int, int>, double> oracleTable(const PowerTable& table)
{
    std::map<std::pair<int, int>, double> out;
    for (const auto& [cs, mw] : table.entries())
        out[{static_cast<int>(cs.component), cs.state}] = mw;
    return out;
}

std::size_t overlappingPairs(const std::vector<FrameRecord>& frames)
{
    std::size_t count = 0;
    for (std::size_t i = 0; i < frames.size(); ++i) {
        for (std::size_t j = i + 1; j < frames.size() && frames[j].start < frames[i].end; ++j)
            ++count;
    }
    return count;
}

// The full static run is shared by several criteria.
std::optional<RunResult> staticRun;
double staticSeconds = 0.0;

const RunResult& fullStatic()
{
    if (!staticRun) {
        const auto t0 = std::chrono::steady_clock::now();
        Network net(parseConfig(presetConfig("static")));
        staticRun = net.run();
        staticSeconds = secondsSince(t0);
    }
    return *staticRun;
}

Verdict pathLoss()
{
    Verdict v;
    const PropagationModel m;
    const double a50 = attenuationDb(50.0, m);
    const double a1 = attenuationDb(1.0, m);
    v.require(std::abs(a50 - 75.025) <= 0.001, "att(50 m) = " + fmt(a50));
    v.require(std::abs(a1 - 41.046) <= 0.001, "att(1 m) = " + fmt(a1));
    v.require(std::abs(a50 - static_cast<double>(oracle::attenuationDb(50.0L))) < 1e-9, "50 m differs from oracle");
    v.require(std::abs(a1 - static_cast<double>(oracle::attenuationDb(1.0L))) < 1e-9, "1 m differs from oracle");
    v.detail += (v.detail.empty() ? "" : "; ") + std::string("att(50)=") + fmt(a50, 5) + " att(1)=" + fmt(a1, 5);
    return v;
}

Verdict staticExactness()
{
    Verdict v;
    const auto cfg = parseConfig(presetConfig("static"));
    const auto& result = fullStatic();
    const Vec2 base = staticPosition(cfg, cfg.base().id);

    std::size_t mismatches = 0;
    std::map<NodeId, std::size_t> perNode;
    for (const auto& rec : result.rssiLog) {
        const Vec2 p = staticPosition(cfg, rec.senderId);
        const auto want = oracle::quantizedRssi(p.x, p.y, base.x, base.y);
        if (rec.rssiDbm != static_cast<double>(want))
            ++mismatches;
        ++perNode[rec.senderId];
    }
    v.require(result.rssiLog.size() == 9u * 3600u,
              "expected 32400 records, got " + std::to_string(result.rssiLog.size()));
    v.require(perNode.size() == 9, "records from " + std::to_string(perNode.size()) + " nodes");
    for (const auto& [node, n] : perNode)
        v.require(n == 3600, "node " + std::to_string(node) + " has " + std::to_string(n) + " records");
    v.require(mismatches == 0, std::to_string(mismatches) + " records differ from the oracle");
    v.require(staticSeconds < 10.0, "took " + fmt(staticSeconds, 2) + " s");
    if (v.pass)
        v.detail = std::to_string(result.rssiLog.size()) + " records exact, " + fmt(staticSeconds, 2) + " s";
    return v;
}

struct MobileTrace {
    std::vector<double> rssi;  // indexed by waypoint
};

MobileTrace runMobile(MovementMode mode, std::optional<std::uint64_t> offsetSeed)
{
    auto cfg = parseConfig(presetConfig("mobile"));
    for (auto& n : cfg.nodes) {
        if (auto* rect = std::get_if<RectangleMobility>(&n.mobility)) {
            rect->mode = mode;
            rect->startOffsetSeed = offsetSeed;
        }
    }
    Network net(cfg);
    const auto result = net.run();
    MobileTrace t;
    for (const auto& rec : result.rssiLog)
        t.rssi.push_back(rec.rssiDbm);
    return t;
}

Verdict mobileScenario()
{
    Verdict v;
    const auto t0 = std::chrono::steady_clock::now();
    const auto cfg = parseConfig(presetConfig("mobile"));
    const Vec2 base = staticPosition(cfg, cfg.base().id);
    const auto& walk = std::get<RectangleMobility>(cfg.nodes[1].mobility);

    const auto discrete = runMobile(MovementMode::Discrete, std::nullopt);
    v.require(discrete.rssi.size() == 19, "discrete run logged " + std::to_string(discrete.rssi.size()));
    for (std::size_t k = 0; k < discrete.rssi.size(); ++k) {
        const Vec2 p = oracleWaypoint(walk, k, 0.0);
        const auto want = oracle::quantizedRssi(p.x, p.y, base.x, base.y);
        v.require(discrete.rssi[k] == static_cast<double>(want),
                  "waypoint " + std::to_string(k) + ": " + fmt(discrete.rssi[k], 0) + " vs " + std::to_string(want));
    }

    double worst = 0.0;
    auto compare = [&](const MobileTrace& other, const char* label) {
        v.require(other.rssi.size() == discrete.rssi.size(), std::string(label) + " record count differs");
        for (std::size_t k = 0; k < std::min(other.rssi.size(), discrete.rssi.size()); ++k) {
            const double dev = std::abs(other.rssi[k] - discrete.rssi[k]);
            worst = std::max(worst, dev);
            v.require(dev <= 1.0, std::string(label) + " waypoint " + std::to_string(k) + " deviates " + fmt(dev, 0));
        }
    };
    compare(runMobile(MovementMode::Continuous, std::nullopt), "continuous");
    for (std::uint64_t seed : {1u, 2u, 3u, 42u}) {
        compare(runMobile(MovementMode::Discrete, seed), "offset/discrete");
        compare(runMobile(MovementMode::Continuous, seed), "offset/continuous");
    }
    const double elapsed = secondsSince(t0);
    v.require(elapsed < 5.0, "took " + fmt(elapsed, 2) + " s");
    if (v.pass)
        v.detail = "19 waypoints exact, max deviation " + fmt(worst, 0) + " dBm, " + fmt(elapsed, 2) + " s";
    return v;
}

Verdict energyOracle()
{
    Verdict v;
    double worst = 0.0;
    for (const char* name : {"static", "mobile"}) {
        const auto cfg = parseConfig(presetConfig(name));
        RunResult owned;
        const RunResult* result = nullptr;
        if (std::string(name) == "static") {
            result = &fullStatic();
        } else {
            Network net(cfg);
            owned = net.run();
            result = &owned;
        }
        std::vector<oracle::Change> trace;
        for (const auto& c : result->stateTrace)
            trace.push_back({c.node, static_cast<int>(c.component), c.state, c.at.count()});
        const auto expected = oracle::replayEnergy(trace, oracleTable(cfg.power), cfg.until.count());
        v.require(result->energy.size() == cfg.nodes.size(), std::string(name) + ": node count");
        for (const auto& ne : result->energy) {
            const long double want = expected.at(ne.node);
            const double rel = static_cast<double>(std::abs(static_cast<long double>(ne.totalJoules) - want) / want);
            worst = std::max(worst, rel);
            v.require(rel <= 1e-9, std::string(name) + " node " + std::to_string(ne.node) + " relative error " +
                                       std::to_string(rel));
        }
    }
    if (v.pass) {
        std::ostringstream ss;
        ss << "max relative error " << worst;
        v.detail = ss.str();
    }
    return v;
}

Verdict frameTiming()
{
    Verdict v;
    const ByteLayout layout;
    v.require(layout.totalBytes() == 15, "layout is not 15 bytes");
    v.require(frameDuration(layout, 2400.0).count() == 50'000'000, "airtime " +
                                                                        std::to_string(frameDuration(layout, 2400.0).count()));
    const auto ends = previewSegments(layout, 2400.0);
    const std::array<int, 5> cumulative{4, 8, 11, 13, 15};
    for (std::size_t i = 0; i < ends.size(); ++i) {
        // byte k ends at k * 8 / 2400 s = k * 10^7 / 3 ns
        const long long want = (static_cast<long long>(cumulative[i]) * 10'000'000LL * 2 + 3) / 6;
        v.require(ends[i].count() == want, "boundary " + std::to_string(i) + " at " + std::to_string(ends[i].count()) +
                                               " ns, expected " + std::to_string(want));
    }
    if (v.pass)
        v.detail = "50000000 ns, boundaries 13333333/26666667/36666667/43333333/50000000";
    return v;
}

Verdict berStatistics()
{
    Verdict v;
    const auto t0 = std::chrono::steady_clock::now();
    const double noiseDbm = -100.0;
    std::ostringstream detail;
    for (double snirDb : {0.0, 6.0, 13.0}) {
        const double gamma = std::pow(10.0, snirDb / 10.0);
        const double p = 0.5 * std::exp(-gamma / 2.0);
        RandomStream rng(20240501, static_cast<std::uint64_t>(snirDb));
        std::uint64_t bits = 0;
        std::uint64_t errors = 0;
        FrameId id = 1;
        while (bits < 1'000'000) {
            Decider d(noiseDbm);
            AirFrame f;
            f.id = id++;
            f.start = 0ns;
            f.duration = frameDuration(f.layout, f.datarateBaud);
            d.onFrameStart(f, noiseDbm + snirDb, true, 0ns);
            auto rec = d.onFrameEnd(f.id, f.end());
            for (auto n : drawBitErrors(rec, Modulation::Fsk2, rng))
                errors += n;
            bits += f.layout.totalBits();
        }
        const double n = static_cast<double>(bits);
        const double sigma = std::sqrt(n * p * (1.0 - p));
        const double z = (static_cast<double>(errors) - n * p) / sigma;
        v.require(std::abs(z) <= 3.0, fmt(snirDb, 0) + " dB: " + std::to_string(errors) + " errors, z=" + fmt(z, 2));
        detail << fmt(snirDb, 0) << " dB z=" << fmt(z, 2) << " ";
    }
    const double elapsed = secondsSince(t0);
    v.require(elapsed < 5.0, "took " + fmt(elapsed, 2) + " s");
    if (v.pass)
        v.detail = detail.str() + "(" + fmt(elapsed, 2) + " s)";
    return v;
}

Verdict tdmaSeparation()
{
    Verdict v;
    const std::size_t staticOverlaps = overlappingPairs(fullStatic().frames);
    v.require(staticOverlaps == 0, "static preset has " + std::to_string(staticOverlaps) + " overlaps");
    {
        Network net(parseConfig(presetConfig("mobile")));
        const auto overlaps = overlappingPairs(net.run().frames);
        v.require(overlaps == 0, "mobile preset has " + std::to_string(overlaps) + " overlaps");
    }

    // Nodes 4 and 5 fire 10 ms and 30 ms into node 2's frame, all three 25 m from the base.
    auto cfg = parseConfig(presetConfig("static"));
    cfg.until = 10s;
    for (auto& n : cfg.nodes) {
        if (n.id == 4)
            n.slotOffset = -110ms;
        if (n.id == 5)
            n.slotOffset = -150ms;
    }
    Network net(cfg);
    const NodeId base = cfg.base().id;
    std::size_t victims = 0;
    std::size_t victimDrops = 0;
    std::size_t minSegments = 1000;
    net.setReceptionObserver([&](NodeId rx, const ReceptionRecord& rec, const ReceptionOutcome& outcome) {
        if (rx != base || rec.frame.sender != 2)
            return;
        ++victims;
        minSegments = std::min(minSegments, rec.segments.size());
        if (std::holds_alternative<DropReason>(outcome))
            ++victimDrops;
    });
    const auto result = net.run();
    const auto overlaps = overlappingPairs(result.frames);
    v.require(overlaps > 0, "injection produced no overlap");
    v.require(victims > 0, "victim frame never reached the base");
    v.require(minSegments >= 3, "victim has only " + std::to_string(minSegments) + " segments");
    v.require(victimDrops > 0, "victim frames were never dropped");
    v.require(result.summary.framesDropped > 0, "no drops counted");
    if (v.pass) {
        v.detail = "clean presets 0 overlaps; injected: " + std::to_string(overlaps) + " overlaps, victim " +
                   std::to_string(minSegments) + " segments, " + std::to_string(victimDrops) + "/" +
                   std::to_string(victims) + " victim frames dropped";
    }
    return v;
}

Verdict determinism()
{
    Verdict v;
    const fs::path root = fs::temp_directory_path() / "wsnsim_acceptance_determinism";
    fs::remove_all(root);

    auto runInto = [&](ScenarioConfig cfg, std::uint64_t seed, const std::string& dir) {
        cfg.seed = seed;
        runScenario(cfg, root / dir, {true});
        return root / dir;
    };
    auto same = [&](const fs::path& a, const fs::path& b, const char* file) {
        const auto x = slurp(a / file);
        return !x.empty() && x == slurp(b / file);
    };

    auto shortStatic = parseConfig(presetConfig("static"));
    shortStatic.until = 120s;
    auto mobile = parseConfig(presetConfig("mobile"));
    // Mis-scheduled variant so the bit-error draws actually matter.
    auto noisy = shortStatic;
    for (auto& n : noisy.nodes) {
        if (n.id == 4)
            n.slotOffset = -110ms;
    }

    const std::array<const char*, 4> traced{"rssi_log.csv", "energy_report.csv", "event_trace.csv",
                                            "frame_trace.csv"};
    const std::array<const char*, 3> clean{"rssi_log.csv", "energy_report.csv", "energy_timeline.csv"};

    struct Case {
        const char* name;
        ScenarioConfig cfg;
        bool cleanChannel;
    };
    for (const Case& c : {Case{"static", shortStatic, true}, Case{"mobile", mobile, true}, Case{"noisy", noisy, false}}) {
        const auto a = runInto(c.cfg, 7, std::string(c.name) + "_a");
        const auto b = runInto(c.cfg, 7, std::string(c.name) + "_b");
        for (const char* file : traced)
            v.require(same(a, b, file), std::string(c.name) + ": " + file + " differs between identical runs");
        if (c.cleanChannel) {
            const auto other = runInto(c.cfg, 8, std::string(c.name) + "_seed8");
            for (const char* file : clean)
                v.require(same(a, other, file), std::string(c.name) + ": " + file + " changed with the seed");
        }
    }
    fs::remove_all(root);
    if (v.pass)
        v.detail = "identical outputs and traces for equal seeds; clean presets seed-independent";
    return v;
}

Verdict conservation()
{
    Verdict v;
    RandomStream rng(99, 9);
    double worst = 0.0;
    std::size_t checks = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        Decider d(-100.0);
        const int k = 1 + static_cast<int>(rng.uniform() * 8.0);
        FrameId id = 1;
        SimTime t{};
        for (int i = 0; i < k; ++i) {
            AirFrame f;
            f.id = id++;
            f.start = t;
            f.duration = 1s;
            d.onFrameStart(f, -110.0 + rng.uniform() * 70.0, rng.uniform() < 0.5, t);
            t += SimTime{static_cast<std::int64_t>(rng.uniform() * 1e6)};
        }
        std::map<FrameId, double> before;
        for (FrameId f = 1; f < id; ++f)
            before[f] = d.interferenceMw(f);

        AirFrame intruder;
        intruder.id = 1000;
        intruder.start = t;
        intruder.duration = 1ms;
        d.onFrameStart(intruder, -110.0 + rng.uniform() * 80.0, true, t);
        d.onFrameEnd(intruder.id, t + 1ms);

        for (const auto& [f, prior] : before) {
            const double now = d.interferenceMw(f);
            const double rel = prior == 0.0 ? std::abs(now) : std::abs(now - prior) / prior;
            worst = std::max(worst, rel);
            ++checks;
            v.require(rel <= 1e-12, "frame " + std::to_string(f) + " off by " + std::to_string(rel));
        }
    }
    if (v.pass) {
        std::ostringstream ss;
        ss << checks << " records checked, max relative change " << worst;
        v.detail = ss.str();
    }
    return v;
}

} // namespace

int main()
{
    report(1, "path-loss oracle equality", pathLoss);
    report(2, "static scenario exactness", staticExactness);
    report(3, "mobile scenario", mobileScenario);
    report(4, "energy oracle equivalence", energyOracle);
    report(5, "frame timing", frameTiming);
    report(6, "BER statistics", berStatistics);
    report(7, "TDMA separation", tdmaSeparation);
    report(8, "determinism", determinism);
    report(9, "interference bookkeeping conservation", conservation);
    std::printf("%d of 9 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
