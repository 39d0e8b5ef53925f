import math

import pytest

import wsnsim


def test_path_loss():
    assert wsnsim.attenuation_db(50.0) == pytest.approx(75.02538, abs=1e-5)
    assert wsnsim.attenuation_db(1.0) == pytest.approx(41.04598, abs=1e-5)
    assert wsnsim.received_power_dbm(1.0, (50, 50), (50, 25)) == pytest.approx(-68.00478, abs=1e-5)
    with pytest.raises(ValueError):
        wsnsim.attenuation_db(0.0)


def test_ber_and_rssi():
    assert wsnsim.ber_for_snir(1.0) == pytest.approx(0.5 * math.exp(-0.5))
    assert wsnsim.quantize_rssi(-67.5) == -68.0
    assert wsnsim.quantize_rssi(-74.025) == -74.0


def test_packets():
    assert wsnsim.crc16(b"123456789") == 0xAEE7
    raw = wsnsim.encode_packet(3, "data", b"\x00\x07")
    assert len(raw) == 7
    assert wsnsim.decode_packet(raw) == {"address": 3, "type": "data", "payload": b"\x00\x07"}
    assert wsnsim.decode_packet(raw[:-1] + bytes([raw[-1] ^ 1])) is None


def test_frame_timing():
    assert wsnsim.frame_duration_ns() == 50_000_000
    assert wsnsim.preview_segments_ns() == [13_333_333, 26_666_667, 36_666_667, 43_333_333, 50_000_000]


def test_waypoints():
    lap = wsnsim.waypoint_schedule(origin=(10, 30))
    assert len(lap) == 19
    assert lap[0] == (0, 10.0, 30.0, 0)
    assert lap[1][3] == round(24e9 / 19)


def test_simulate_static_preset():
    text = wsnsim.preset_config("static")
    result = wsnsim.simulate(text, until_s=3)
    assert result["frames_dropped"] == 0
    assert len(result["rssi_log"]) == 27
    by_sender = {rec[2]: rec[3] for rec in result["rssi_log"]}
    assert by_sender[2] == -68.0
    assert by_sender[1] == -71.0
    assert set(result["energy"]) == set(range(10))
    node = result["energy"][0]
    assert node["total_j"] == pytest.approx(sum(node["states"].values()))


def test_run_scenario_writes_outputs(tmp_path):
    result = wsnsim.run_scenario(wsnsim.preset_config("mobile"), tmp_path, trace=True)
    assert len(result["rssi_log"]) == 19
    for name in ("rssi_log.csv", "energy_report.csv", "rssi_by_position.csv", "event_trace.csv", "run_meta.ini"):
        assert (tmp_path / name).exists()


def test_config_errors():
    with pytest.raises(wsnsim.ConfigError, match="warp"):
        wsnsim.simulate("[radio]\nwarp = 1\n")
    with pytest.raises(ValueError):
        wsnsim.preset_config("orbit")
    normalized = wsnsim.normalize_config(wsnsim.preset_config("static"))
    assert wsnsim.normalize_config(normalized) == normalized
