#include "wsnsim/config.hpp"

#include "wsnsim/error.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace wsnsim {

namespace {

struct RawEntry {
    std::string key;
    std::string value;
    int line = 0;
};

struct RawSection {
    std::string name;
    int line = 0;
    std::vector<RawEntry> entries;
};

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<RawSection> tokenize(std::string_view text, std::string_view source)
{
    std::vector<RawSection> sections;
    std::set<std::string> seen;
    int lineNo = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++lineNo;

        if (const auto c = line.find_first_of("#;"); c != std::string_view::npos)
            line = line.substr(0, c);
        line = trim(line);
        if (line.empty())
            continue;

        const std::string where = std::string(source) + ":" + std::to_string(lineNo) + ": ";
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError(where + "unterminated section header");
            std::string name(trim(line.substr(1, line.size() - 2)));
            if (name.empty())
                throw ConfigError(where + "empty section name");
            if (!seen.insert(name).second) {
                if (name.starts_with("node."))
                    throw ConfigError(where + "duplicate node id in [" + name + "]");
                throw ConfigError(where + "duplicate section [" + name + "]");
            }
            sections.push_back({std::move(name), lineNo, {}});
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError(where + "expected 'key = value'");
        if (sections.empty())
            throw ConfigError(where + "key outside of any section");
        std::string key(trim(line.substr(0, eq)));
        std::string value(trim(line.substr(eq + 1)));
        if (key.empty())
            throw ConfigError(where + "missing key");
        for (const auto& e : sections.back().entries) {
            if (e.key == key)
                throw ConfigError(where + "[" + sections.back().name + "] repeats key '" + key + "'");
        }
        sections.back().entries.push_back({std::move(key), std::move(value), lineNo});
    }
    return sections;
}

/// Typed access to one section; every key must be consumed.
class SectionReader {
public:
    SectionReader(const RawSection& section, std::string_view source)
        : section_(section), source_(source)
    {
    }

    [[noreturn]] void fail(const std::string& message, int line = 0) const
    {
        throw ConfigError(std::string(source_) + ":" + std::to_string(line ? line : section_.line) +
                          ": [" + section_.name + "] " + message);
    }

    const RawEntry* find(const std::string& key)
    {
        for (const auto& e : section_.entries) {
            if (e.key == key) {
                used_.insert(key);
                return &e;
            }
        }
        return nullptr;
    }

    bool has(const std::string& key) const
    {
        for (const auto& e : section_.entries) {
            if (e.key == key)
                return true;
        }
        return false;
    }

    double number(const std::string& key, double fallback)
    {
        const RawEntry* e = find(key);
        return e ? parseNumber(*e) : fallback;
    }

    double requiredNumber(const std::string& key)
    {
        const RawEntry* e = find(key);
        if (e == nullptr)
            fail("missing required key '" + key + "'");
        return parseNumber(*e);
    }

    std::uint64_t integer(const std::string& key, std::uint64_t fallback)
    {
        const RawEntry* e = find(key);
        return e ? parseInteger(*e) : fallback;
    }

    std::optional<std::uint64_t> optionalInteger(const std::string& key)
    {
        const RawEntry* e = find(key);
        if (e == nullptr)
            return std::nullopt;
        return parseInteger(*e);
    }

    /// Duration given in `unitNs` nanoseconds per unit, rounded to the nearest ns.
    SimTime duration(const std::string& key, SimTime fallback, double unitNs)
    {
        const RawEntry* e = find(key);
        if (e == nullptr)
            return fallback;
        return SimTime{std::llround(static_cast<long double>(parseNumber(*e)) * unitNs)};
    }

    bool boolean(const std::string& key, bool fallback)
    {
        const RawEntry* e = find(key);
        if (e == nullptr)
            return fallback;
        if (e->value == "true" || e->value == "yes" || e->value == "1")
            return true;
        if (e->value == "false" || e->value == "no" || e->value == "0")
            return false;
        fail("'" + key + "' expects true or false, got '" + e->value + "'", e->line);
    }

    std::string text(const std::string& key, const std::string& fallback)
    {
        const RawEntry* e = find(key);
        return e ? e->value : fallback;
    }

    template <typename Enum, typename Parse>
    Enum choice(const std::string& key, Enum fallback, Parse parse, std::string_view allowed)
    {
        const RawEntry* e = find(key);
        if (e == nullptr)
            return fallback;
        if (auto v = parse(e->value))
            return *v;
        fail("'" + key + "' must be one of " + std::string(allowed) + ", got '" + e->value + "'",
             e->line);
    }

    const std::vector<RawEntry>& entries() const { return section_.entries; }
    void markUsed(const std::string& key) { used_.insert(key); }

    void finish() const
    {
        for (const auto& e : section_.entries) {
            if (!used_.contains(e.key))
                fail("unknown key '" + e.key + "'", e.line);
        }
    }

private:
    double parseNumber(const RawEntry& e) const
    {
        double v = 0.0;
        const char* first = e.value.data();
        const char* last = first + e.value.size();
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc{} || ptr != last || !std::isfinite(v))
            fail("'" + e.key + "' expects a number, got '" + e.value + "'", e.line);
        return v;
    }

    std::uint64_t parseInteger(const RawEntry& e) const
    {
        std::uint64_t v = 0;
        const char* first = e.value.data();
        const char* last = first + e.value.size();
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc{} || ptr != last)
            fail("'" + e.key + "' expects a non-negative integer, got '" + e.value + "'", e.line);
        return v;
    }

    const RawSection& section_;
    std::string_view source_;
    std::set<std::string> used_;
};

constexpr double kNsPerSecond = 1e9;
constexpr double kNsPerMs = 1e6;
constexpr double kNsPerUs = 1e3;

std::optional<bool> parseDelayFlag(std::string_view v)
{
    if (v == "zero")
        return false;
    if (v == "speed-of-light")
        return true;
    return std::nullopt;
}

std::optional<ListenMode> parseListen(std::string_view v)
{
    if (v == "window")
        return ListenMode::Window;
    if (v == "continuous")
        return ListenMode::Continuous;
    return std::nullopt;
}

std::optional<TxTrigger> parseTrigger(std::string_view v)
{
    if (v == "beacon")
        return TxTrigger::Beacon;
    if (v == "waypoint")
        return TxTrigger::Waypoint;
    return std::nullopt;
}

std::optional<NodeRole> parseRole(std::string_view v)
{
    if (v == "base")
        return NodeRole::Base;
    if (v == "sensor")
        return NodeRole::Sensor;
    return std::nullopt;
}

std::optional<MovementMode> parseMode(std::string_view v)
{
    if (v == "discrete")
        return MovementMode::Discrete;
    if (v == "continuous")
        return MovementMode::Continuous;
    return std::nullopt;
}

std::optional<Modulation> parseModulation(std::string_view v)
{
    if (v == "fsk2")
        return Modulation::Fsk2;
    return std::nullopt;
}

std::optional<RadioState> parseInterRound(std::string_view v)
{
    if (v == "sleep")
        return RadioState::Sleep;
    if (v == "idle")
        return RadioState::Idle;
    return std::nullopt;
}

NodeId parseNodeId(const RawSection& s, std::string_view prefix, std::string_view source)
{
    const std::string_view digits = std::string_view(s.name).substr(prefix.size());
    NodeId id = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), id);
    if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size())
        throw ConfigError(std::string(source) + ":" + std::to_string(s.line) + ": [" + s.name +
                          "] node sections are named [" + std::string(prefix) + "<id>]");
    return id;
}

void readRadio(SectionReader& r, RadioConfig& radio)
{
    radio.txPowerDbm = r.number("tx_power_dbm", radio.txPowerDbm);
    radio.datarateBaud = r.number("datarate_baud", radio.datarateBaud);
    radio.modulation = r.choice("modulation", radio.modulation, parseModulation, "fsk2");
    radio.bitsPerSymbol = static_cast<std::uint32_t>(r.integer("bits_per_symbol", radio.bitsPerSymbol));
    radio.noiseFloorDbm = r.number("noise_floor_dbm", radio.noiseFloorDbm);
    radio.rssiResolutionDb = r.number("rssi_resolution_db", radio.rssiResolutionDb);
    auto& l = radio.layout;
    l.preambleBytes = static_cast<std::uint32_t>(r.integer("preamble_bytes", l.preambleBytes));
    l.syncBytes = static_cast<std::uint32_t>(r.integer("sync_bytes", l.syncBytes));
    l.headerBytes = static_cast<std::uint32_t>(r.integer("header_bytes", l.headerBytes));
    l.payloadBytes = static_cast<std::uint32_t>(r.integer("payload_bytes", l.payloadBytes));
    l.crcBytes = static_cast<std::uint32_t>(r.integer("crc_bytes", l.crcBytes));
    if (l.headerBytes != 3 || l.crcBytes != 2)
        r.fail("the packet codec uses a 3-byte header and a 2-byte CRC");

    const std::string prefix = "transition_us.";
    for (const auto& e : r.entries()) {
        if (!e.key.starts_with(prefix))
            continue;
        const std::string pair = e.key.substr(prefix.size());
        const auto dot = pair.find('.');
        const auto from = radioStateFromString(pair.substr(0, dot));
        const auto to = dot == std::string::npos ? std::nullopt
                                                 : radioStateFromString(pair.substr(dot + 1));
        if (!from || !to)
            r.fail("'" + e.key + "' should look like transition_us.<from>.<to>", e.line);
        radio.transitionTimes[{*from, *to}] = r.duration(e.key, {}, kNsPerUs);
    }
}

void readMobility(SectionReader& r, NodeConfig& node)
{
    const std::string type = r.text("type", "rectangle");
    if (type == "static") {
        node.mobility = StaticMobility{{r.requiredNumber("x"), r.requiredNumber("y")}};
        return;
    }
    if (type != "rectangle")
        r.fail("'type' must be static or rectangle, got '" + type + "'");
    RectangleMobility rect;
    rect.origin = {r.requiredNumber("origin_x"), r.requiredNumber("origin_y")};
    rect.width = r.requiredNumber("width_m");
    rect.height = r.requiredNumber("height_m");
    rect.waypointCount = static_cast<std::uint32_t>(r.integer("waypoints", rect.waypointCount));
    rect.speedMps = r.number("speed_mps", rect.speedMps);
    rect.mode = r.choice("mode", rect.mode, parseMode, "discrete, continuous");
    rect.startOffsetSeed = r.optionalInteger("start_offset_seed");
    rect.maxStartOffsetM = r.number("start_offset_max_m", rect.maxStartOffsetM);
    try {
        rect.validate();
    } catch (const std::invalid_argument& e) {
        r.fail(e.what());
    }
    node.mobility = rect;
}

} // namespace

std::string_view toString(NodeRole role)
{
    return role == NodeRole::Base ? "base" : "sensor";
}

const NodeConfig& ScenarioConfig::base() const
{
    for (const auto& n : nodes) {
        if (n.role == NodeRole::Base)
            return n;
    }
    throw ConfigError("scenario has no base station");
}

void ScenarioConfig::validate() const
{
    if (!(playgroundWidthM > 0.0) || !(playgroundHeightM > 0.0))
        throw ConfigError("[scenario] playground dimensions must be positive");
    if (until <= kTimeZero)
        throw ConfigError("[scenario] until_s must be positive");
    try {
        radio.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("[radio] ") + e.what());
    }
    try {
        propagation.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("[channel] ") + e.what());
    }
    if (medium.sensitivityCutoffDbm > radio.noiseFloorDbm)
        throw ConfigError("[channel] sensitivity_cutoff_dbm must not exceed the radio noise floor");
    if (energySampleInterval <= kTimeZero)
        throw ConfigError("[output] energy_sample_s must be positive");
    power.validate();

    if (nodes.empty())
        throw ConfigError("scenario defines no nodes");
    std::size_t bases = 0;
    std::set<NodeId> ids;
    for (const auto& n : nodes) {
        const std::string section = "[node." + std::to_string(n.id) + "] ";
        if (!ids.insert(n.id).second)
            throw ConfigError(section + "duplicate node id");
        if (n.id >= kBroadcastAddress)
            throw ConfigError(section + "node ids must fit the address byte (0-254)");
        if (n.role == NodeRole::Base)
            ++bases;

        auto inside = [&](Vec2 p) {
            return p.x >= 0.0 && p.y >= 0.0 && p.x <= playgroundWidthM && p.y <= playgroundHeightM;
        };
        if (const auto* s = std::get_if<StaticMobility>(&n.mobility)) {
            if (!inside(s->position))
                throw ConfigError(section + "position (" + std::to_string(s->position.x) + ", " +
                                  std::to_string(s->position.y) + ") lies outside the playground");
            if (n.trigger == TxTrigger::Waypoint)
                throw ConfigError(section + "waypoint-triggered nodes need rectangle mobility");
        } else {
            const auto& r = std::get<RectangleMobility>(n.mobility);
            const Vec2 far{r.origin.x + r.width, r.origin.y + r.height};
            if (!inside(r.origin) || !inside(far))
                throw ConfigError("[mobility." + std::to_string(n.id) +
                                  "] rectangle leaves the playground");
        }
        if (n.role == NodeRole::Sensor && n.trigger == TxTrigger::Beacon && !beaconEnabled)
            throw ConfigError(section + "beacon-triggered sensor but [tdma] beacon_enabled = false");
    }
    if (bases != 1)
        throw ConfigError("scenario needs exactly one base station, found " + std::to_string(bases));

    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const auto* a = std::get_if<StaticMobility>(&nodes[i].mobility);
        for (std::size_t j = i + 1; a && j < nodes.size(); ++j) {
            const auto* b = std::get_if<StaticMobility>(&nodes[j].mobility);
            if (b && a->position == b->position)
                throw ConfigError("[node." + std::to_string(nodes[j].id) + "] shares its position with node " +
                                  std::to_string(nodes[i].id));
        }
    }

    if (beaconEnabled)
        tdma.validate(frameDuration(radio.layout, radio.datarateBaud));
}

ScenarioConfig parseConfig(std::string_view text, std::string_view source)
{
    const auto sections = tokenize(text, source);
    ScenarioConfig cfg;
    bool hasPower = false;
    std::map<NodeId, const RawSection*> mobilitySections;

    for (const auto& s : sections) {
        SectionReader r(s, source);
        if (s.name == "scenario") {
            cfg.name = r.text("name", cfg.name);
            cfg.reproduction = r.boolean("reproduction", cfg.reproduction);
            cfg.seed = r.integer("seed", cfg.seed);
            cfg.until = r.duration("until_s", cfg.until, kNsPerSecond);
            cfg.playgroundWidthM = r.number("playground_width_m", cfg.playgroundWidthM);
            cfg.playgroundHeightM = r.number("playground_height_m", cfg.playgroundHeightM);
        } else if (s.name == "radio") {
            readRadio(r, cfg.radio);
        } else if (s.name == "channel") {
            cfg.propagation.attenuationExponent =
                r.number("attenuation_exponent", cfg.propagation.attenuationExponent);
            cfg.propagation.effectiveAreaM2 = r.number("effective_area_m2", cfg.propagation.effectiveAreaM2);
            cfg.medium.sensitivityCutoffDbm =
                r.number("sensitivity_cutoff_dbm", cfg.medium.sensitivityCutoffDbm);
            const bool light = r.choice("propagation_delay", false, parseDelayFlag, "zero, speed-of-light");
            cfg.medium.propagationDelay = light ? PropagationDelay::SpeedOfLight : PropagationDelay::Zero;
        } else if (s.name == "power") {
            hasPower = true;
            PowerTable table;
            for (const auto& e : s.entries) {
                const auto cs = parseComponentState(e.key);
                if (!cs)
                    r.fail("unknown power entry '" + e.key + "'", e.line);
                table.set(*cs, r.requiredNumber(e.key));
            }
            try {
                table.validate();
            } catch (const ConfigError& e) {
                r.fail(e.what());
            }
            cfg.power = table;
            cfg.powerIsPlaceholder = false;
        } else if (s.name == "tdma") {
            cfg.tdma.beaconPeriod = r.duration("beacon_period_ms", cfg.tdma.beaconPeriod, kNsPerMs);
            cfg.tdma.slotTime = r.duration("slot_time_ms", cfg.tdma.slotTime, kNsPerMs);
            cfg.tdma.slotGuard = r.duration("slot_guard_ms", cfg.tdma.slotGuard, kNsPerMs);
            cfg.tdma.wakeLead = r.duration("wake_lead_ms", cfg.tdma.wakeLead, kNsPerMs);
            cfg.beaconEnabled = r.boolean("beacon_enabled", cfg.beaconEnabled);
            cfg.baseListen = r.choice("base_listen", cfg.baseListen, parseListen, "window, continuous");
            cfg.interRoundState =
                r.choice("inter_round_state", cfg.interRoundState, parseInterRound, "sleep, idle");
        } else if (s.name == "firmware") {
            cfg.beaconPrep.executionTime = r.duration("beacon_prep_us", {}, kNsPerUs);
            cfg.dataPrep.executionTime = r.duration("data_prep_us", {}, kNsPerUs);
            if (cfg.beaconPrep.executionTime < kTimeZero || cfg.dataPrep.executionTime < kTimeZero)
                r.fail("task execution times must not be negative");
        } else if (s.name == "output") {
            cfg.energySampleInterval = r.duration("energy_sample_s", cfg.energySampleInterval, kNsPerSecond);
        } else if (s.name.starts_with("node.")) {
            NodeConfig node;
            node.id = parseNodeId(s, "node.", source);
            node.role = r.choice("role", NodeRole::Sensor, parseRole, "base, sensor");
            if (r.has("x") || r.has("y"))
                node.mobility = StaticMobility{{r.requiredNumber("x"), r.requiredNumber("y")}};
            if (auto slot = r.optionalInteger("slot"))
                node.slot = static_cast<std::uint32_t>(*slot);
            node.slotOffset = r.duration("slot_offset_ms", {}, kNsPerMs);
            node.trigger = r.choice("trigger", node.trigger, parseTrigger, "beacon, waypoint");
            r.finish();
            cfg.nodes.push_back(node);
            continue;
        } else if (s.name.starts_with("mobility.")) {
            mobilitySections[parseNodeId(s, "mobility.", source)] = &s;
            continue;
        } else {
            r.fail("unknown section");
        }
        r.finish();
    }

    for (const auto& [id, section] : mobilitySections) {
        SectionReader r(*section, source);
        auto it = std::find_if(cfg.nodes.begin(), cfg.nodes.end(),
                               [id = id](const NodeConfig& n) { return n.id == id; });
        if (it == cfg.nodes.end())
            r.fail("no [node." + std::to_string(id) + "] section for this mobility model");
        readMobility(r, *it);
        r.finish();
    }

    for (const auto& s : sections) {
        if (!s.name.starts_with("node."))
            continue;
        const NodeId id = parseNodeId(s, "node.", source);
        const bool placed = mobilitySections.contains(id) ||
                            std::any_of(s.entries.begin(), s.entries.end(),
                                        [](const RawEntry& e) { return e.key == "x"; });
        if (!placed)
            SectionReader(s, source).fail("missing position: set x and y or add [mobility." +
                                          std::to_string(id) + "]");
    }

    if (cfg.reproduction && !hasPower)
        throw ConfigError(std::string(source) + ": [power] section is required by reproduction scenario '" +
                          cfg.name + "'");

    // Beacon-triggered sensors take slots 1..N in file order unless pinned.
    std::uint32_t nextSlot = 1;
    for (auto& n : cfg.nodes) {
        if (n.role != NodeRole::Sensor || n.trigger != TxTrigger::Beacon)
            continue;
        if (!n.slot)
            n.slot = nextSlot;
        nextSlot = std::max(nextSlot, *n.slot) + 1;
        cfg.tdma.slotOf[n.id] = *n.slot;
    }

    cfg.validate();
    return cfg;
}

ScenarioConfig loadConfig(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("cannot read config file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parseConfig(buf.str(), path.string());
}

namespace {

std::string num(double v)
{
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

std::string durationIn(SimTime t, double unitNs)
{
    return num(static_cast<double>(t.count()) / unitNs);
}

} // namespace

std::string serializeConfig(const ScenarioConfig& c)
{
    std::ostringstream o;
    o << "[scenario]\n"
      << "name = " << c.name << "\n"
      << "reproduction = " << (c.reproduction ? "true" : "false") << "\n"
      << "seed = " << c.seed << "\n"
      << "until_s = " << durationIn(c.until, kNsPerSecond) << "\n"
      << "playground_width_m = " << num(c.playgroundWidthM) << "\n"
      << "playground_height_m = " << num(c.playgroundHeightM) << "\n\n";

    const auto& r = c.radio;
    o << "[radio]\n"
      << "tx_power_dbm = " << num(r.txPowerDbm) << "\n"
      << "datarate_baud = " << num(r.datarateBaud) << "\n"
      << "modulation = " << toString(r.modulation) << "\n"
      << "bits_per_symbol = " << r.bitsPerSymbol << "\n"
      << "noise_floor_dbm = " << num(r.noiseFloorDbm) << "\n"
      << "rssi_resolution_db = " << num(r.rssiResolutionDb) << "\n"
      << "preamble_bytes = " << r.layout.preambleBytes << "\n"
      << "sync_bytes = " << r.layout.syncBytes << "\n"
      << "header_bytes = " << r.layout.headerBytes << "\n"
      << "payload_bytes = " << r.layout.payloadBytes << "\n"
      << "crc_bytes = " << r.layout.crcBytes << "\n";
    for (auto from : {RadioState::Sleep, RadioState::Idle, RadioState::Rx, RadioState::Tx}) {
        for (auto to : {RadioState::Sleep, RadioState::Idle, RadioState::Rx, RadioState::Tx}) {
            if (from == to || (from != RadioState::Idle && to != RadioState::Idle))
                continue;
            o << "transition_us." << toString(from) << "." << toString(to) << " = "
              << durationIn(r.transitionTime(from, to), kNsPerUs) << "\n";
        }
    }
    o << "\n";

    o << "[channel]\n"
      << "attenuation_exponent = " << num(c.propagation.attenuationExponent) << "\n"
      << "effective_area_m2 = " << num(c.propagation.effectiveAreaM2) << "\n"
      << "sensitivity_cutoff_dbm = " << num(c.medium.sensitivityCutoffDbm) << "\n"
      << "propagation_delay = " << toString(c.medium.propagationDelay) << "\n\n";

    o << "[power]\n";
    if (c.powerIsPlaceholder)
        o << "# placeholder values, not hardware data\n";
    for (const auto& [cs, mw] : c.power.entries())
        o << toString(cs.component) << "." << stateName(cs) << " = " << num(mw) << "\n";
    o << "\n";

    o << "[tdma]\n"
      << "beacon_period_ms = " << durationIn(c.tdma.beaconPeriod, kNsPerMs) << "\n"
      << "slot_time_ms = " << durationIn(c.tdma.slotTime, kNsPerMs) << "\n"
      << "slot_guard_ms = " << durationIn(c.tdma.slotGuard, kNsPerMs) << "\n"
      << "wake_lead_ms = " << durationIn(c.tdma.wakeLead, kNsPerMs) << "\n"
      << "beacon_enabled = " << (c.beaconEnabled ? "true" : "false") << "\n"
      << "base_listen = " << toString(c.baseListen) << "\n"
      << "inter_round_state = " << toString(c.interRoundState) << "\n\n";

    o << "[firmware]\n"
      << "beacon_prep_us = " << durationIn(c.beaconPrep.executionTime, kNsPerUs) << "\n"
      << "data_prep_us = " << durationIn(c.dataPrep.executionTime, kNsPerUs) << "\n\n";

    o << "[output]\n"
      << "energy_sample_s = " << durationIn(c.energySampleInterval, kNsPerSecond) << "\n";

    for (const auto& n : c.nodes) {
        o << "\n[node." << n.id << "]\n"
          << "role = " << toString(n.role) << "\n";
        if (const auto* s = std::get_if<StaticMobility>(&n.mobility))
            o << "x = " << num(s->position.x) << "\ny = " << num(s->position.y) << "\n";
        if (n.role == NodeRole::Sensor) {
            o << "trigger = " << toString(n.trigger) << "\n";
            if (n.slot)
                o << "slot = " << *n.slot << "\n";
            o << "slot_offset_ms = " << durationIn(n.slotOffset, kNsPerMs) << "\n";
        }
    }
    for (const auto& n : c.nodes) {
        const auto* rect = std::get_if<RectangleMobility>(&n.mobility);
        if (rect == nullptr)
            continue;
        o << "\n[mobility." << n.id << "]\n"
          << "type = rectangle\n"
          << "origin_x = " << num(rect->origin.x) << "\n"
          << "origin_y = " << num(rect->origin.y) << "\n"
          << "width_m = " << num(rect->width) << "\n"
          << "height_m = " << num(rect->height) << "\n"
          << "waypoints = " << rect->waypointCount << "\n"
          << "speed_mps = " << num(rect->speedMps) << "\n"
          << "mode = " << toString(rect->mode) << "\n";
        if (rect->startOffsetSeed)
            o << "start_offset_seed = " << *rect->startOffsetSeed << "\n";
        o << "start_offset_max_m = " << num(rect->maxStartOffsetM) << "\n";
    }
    return o.str();
}

} // namespace wsnsim
