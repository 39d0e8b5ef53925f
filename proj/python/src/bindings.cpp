#include <wsnsim/config.hpp>
#include <wsnsim/decider.hpp>
#include <wsnsim/error.hpp>
#include <wsnsim/mobility.hpp>
#include <wsnsim/network.hpp>
#include <wsnsim/packet.hpp>
#include <wsnsim/propagation.hpp>
#include <wsnsim/scenario.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <cmath>
#include <optional>
#include <string>

namespace py = pybind11;
using namespace wsnsim;

namespace {

PropagationModel model(double exponent, double area)
{
    PropagationModel m{exponent, area};
    m.validate();
    return m;
}

ByteLayout layout(std::uint32_t preamble, std::uint32_t sync, std::uint32_t header, std::uint32_t payload,
                  std::uint32_t crc)
{
    return ByteLayout{preamble, sync, header, payload, crc};
}

std::vector<std::uint8_t> toBytes(const py::bytes& b)
{
    const std::string s = b;
    return {s.begin(), s.end()};
}

py::bytes fromBytes(const std::vector<std::uint8_t>& v)
{
    return py::bytes(reinterpret_cast<const char*>(v.data()), v.size());
}

PacketType packetType(const std::string& name)
{
    if (name == "beacon")
        return PacketType::Beacon;
    if (name == "data")
        return PacketType::Data;
    throw py::value_error("packet type must be 'beacon' or 'data'");
}

ScenarioConfig prepare(const std::string& text, std::optional<std::uint64_t> seed, std::optional<double> untilS)
{
    ScenarioConfig cfg = parseConfig(text, "<python>");
    if (seed)
        cfg.seed = *seed;
    if (untilS) {
        if (!(*untilS > 0.0))
            throw ConfigError("until must be positive");
        cfg.until = fromSeconds(*untilS);
    }
    cfg.validate();
    return cfg;
}

py::dict toDict(const RunResult& r)
{
    py::dict out;
    out["events_dispatched"] = r.summary.eventsDispatched;
    out["end_time_ns"] = r.summary.endTime.count();
    out["frames_sent"] = r.summary.framesSent;
    out["frames_received"] = r.summary.framesReceived;
    out["frames_dropped"] = r.summary.framesDropped;

    py::list rssi;
    for (const auto& rec : r.rssiLog)
        rssi.append(py::make_tuple(rec.time.count(), rec.baseId, rec.senderId, rec.rssiDbm, rec.round));
    out["rssi_log"] = rssi;

    py::dict energy;
    for (const auto& ne : r.energy) {
        py::dict states;
        for (const auto& e : ne.breakdown)
            states[py::str(std::string(toString(e.state.component)) + "." + stateName(e.state))] = e.joules;
        energy[py::int_(ne.node)] = py::dict(py::arg("total_j") = ne.totalJoules, py::arg("states") = states);
    }
    out["energy"] = energy;

    py::list frames;
    for (const auto& f : r.frames)
        frames.append(py::make_tuple(f.id, f.sender, f.start.count(), f.end.count(), f.deliveries.size()));
    out["frames"] = frames;
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Discrete-event wireless sensor network simulator";
    m.attr("__version__") = std::string(kVersion);
    m.attr("RNG_ALGORITHM") = std::string(kRngAlgorithm);

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<SimulationError>(m, "SimulationError", PyExc_RuntimeError);
    py::register_exception<OutputError>(m, "OutputError", PyExc_OSError);

    m.def("attenuation_db",
          [](double d, double exponent, double area) { return attenuationDb(d, model(exponent, area)); },
          py::arg("distance_m"), py::arg("exponent") = 2.0, py::arg("effective_area_m2") = 9.87670e-4);

    m.def("received_power_dbm",
          [](double txDbm, std::pair<double, double> tx, std::pair<double, double> rx, double exponent,
             double area) {
              return receivedPowerDbm(txDbm, {tx.first, tx.second}, {rx.first, rx.second}, model(exponent, area));
          },
          py::arg("tx_power_dbm"), py::arg("tx"), py::arg("rx"), py::arg("exponent") = 2.0,
          py::arg("effective_area_m2") = 9.87670e-4);

    m.def("ber_for_snir", [](double snir) { return berForSnir(snir, Modulation::Fsk2); }, py::arg("snir_linear"),
          "Bit error probability of non-coherent binary FSK.");

    m.def("quantize_rssi", &quantizeRssi, py::arg("rx_power_dbm"), py::arg("resolution_db") = 1.0);

    m.def("crc16", [](const py::bytes& data) { return crc16(toBytes(data)); }, py::arg("data"));

    m.def("encode_packet",
          [](std::uint8_t address, const std::string& type, const py::bytes& payload) {
              return fromBytes(encodePacket({address, packetType(type), toBytes(payload)}));
          },
          py::arg("address"), py::arg("type"), py::arg("payload") = py::bytes());

    m.def("decode_packet",
          [](const py::bytes& data) -> py::object {
              const auto p = decodePacket(toBytes(data));
              if (!p)
                  return py::none();
              return py::dict(py::arg("address") = p->address,
                              py::arg("type") = std::string(toString(p->type)),
                              py::arg("payload") = fromBytes(p->payload));
          },
          py::arg("data"), "None when the length, type or CRC does not check out.");

    m.def("frame_duration_ns",
          [](double rate, std::uint32_t pre, std::uint32_t sync, std::uint32_t hdr, std::uint32_t pay,
             std::uint32_t crc) { return frameDuration(layout(pre, sync, hdr, pay, crc), rate).count(); },
          py::arg("datarate_baud") = 2400.0, py::arg("preamble_bytes") = 4, py::arg("sync_bytes") = 4,
          py::arg("header_bytes") = 3, py::arg("payload_bytes") = 2, py::arg("crc_bytes") = 2);

    m.def("preview_segments_ns",
          [](double rate, std::uint32_t pre, std::uint32_t sync, std::uint32_t hdr, std::uint32_t pay,
             std::uint32_t crc) {
              std::vector<std::int64_t> out;
              for (auto t : previewSegments(layout(pre, sync, hdr, pay, crc), rate))
                  out.push_back(t.count());
              return out;
          },
          py::arg("datarate_baud") = 2400.0, py::arg("preamble_bytes") = 4, py::arg("sync_bytes") = 4,
          py::arg("header_bytes") = 3, py::arg("payload_bytes") = 2, py::arg("crc_bytes") = 2);

    m.def("waypoint_schedule",
          [](std::pair<double, double> origin, double width, double height, std::uint32_t count, double speed) {
              RectangleMobility rect;
              rect.origin = {origin.first, origin.second};
              rect.width = width;
              rect.height = height;
              rect.waypointCount = count;
              rect.speedMps = speed;
              py::list out;
              for (const auto& wp : waypointSchedule(rect))
                  out.append(py::make_tuple(wp.index, wp.position.x, wp.position.y, wp.arrival.count()));
              return out;
          },
          py::arg("origin") = std::pair<double, double>{0.0, 0.0}, py::arg("width_m") = 80.0,
          py::arg("height_m") = 40.0, py::arg("waypoints") = 19, py::arg("speed_mps") = 10.0,
          "(index, x, y, arrival_ns) for one lap.");

    m.def("preset_config", [](const std::string& name) { return presetConfig(name); }, py::arg("name"));

    m.def("normalize_config", [](const std::string& text) { return serializeConfig(prepare(text, {}, {})); },
          py::arg("text"), "Validated configuration with every default spelled out.");

    m.def("simulate",
          [](const std::string& text, std::optional<std::uint64_t> seed, std::optional<double> untilS) {
              ScenarioConfig cfg = prepare(text, seed, untilS);
              RunResult result;
              {
                  py::gil_scoped_release release;
                  Network net(cfg);
                  result = net.run();
              }
              return toDict(result);
          },
          py::arg("config"), py::arg("seed") = py::none(), py::arg("until_s") = py::none(),
          "Runs in memory and returns the summary, RSSI log, energy and frame list.");

    m.def("run_scenario",
          [](const std::string& text, const std::filesystem::path& outDir, std::optional<std::uint64_t> seed,
             std::optional<double> untilS, bool trace) {
              ScenarioConfig cfg = prepare(text, seed, untilS);
              RunResult result;
              {
                  py::gil_scoped_release release;
                  result = runScenario(cfg, outDir, {trace});
              }
              return toDict(result);
          },
          py::arg("config"), py::arg("out_dir"), py::arg("seed") = py::none(), py::arg("until_s") = py::none(),
          py::arg("trace") = false, "Runs and writes the CSV outputs into out_dir.");
}
