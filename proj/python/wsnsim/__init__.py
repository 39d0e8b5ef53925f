"""Python bindings for the wsnsim wireless sensor network simulator."""

from ._core import (
    RNG_ALGORITHM,
    ConfigError,
    OutputError,
    SimulationError,
    __version__,
    attenuation_db,
    ber_for_snir,
    crc16,
    decode_packet,
    encode_packet,
    frame_duration_ns,
    normalize_config,
    preset_config,
    preview_segments_ns,
    quantize_rssi,
    received_power_dbm,
    run_scenario,
    simulate,
    waypoint_schedule,
)

__all__ = [
    "RNG_ALGORITHM",
    "ConfigError",
    "OutputError",
    "SimulationError",
    "__version__",
    "attenuation_db",
    "ber_for_snir",
    "crc16",
    "decode_packet",
    "encode_packet",
    "frame_duration_ns",
    "normalize_config",
    "preset_config",
    "preview_segments_ns",
    "quantize_rssi",
    "received_power_dbm",
    "run_scenario",
    "simulate",
    "waypoint_schedule",
]
