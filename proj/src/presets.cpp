#include "wsnsim/config.hpp"

#include "wsnsim/error.hpp"

namespace wsnsim {

namespace {

constexpr std::string_view kCommon = R"([radio]
tx_power_dbm = 1
datarate_baud = 2400
modulation = fsk2
noise_floor_dbm = -100
rssi_resolution_db = 1
preamble_bytes = 4
sync_bytes = 4
header_bytes = 3
payload_bytes = 2
crc_bytes = 2

[channel]
attenuation_exponent = 2
effective_area_m2 = 9.87670e-4
sensitivity_cutoff_dbm = -110
propagation_delay = zero

# Illustrative transceiver/microcontroller draw at 3 V in mW. These are not
# measurements; set them from your hardware before comparing absolute energy.
[power]
radio.sleep = 0.0012
radio.idle = 4.5
radio.rx = 46.8
radio.tx = 63.6
cpu.sleep = 0.006
cpu.active = 1.2

[firmware]
beacon_prep_us = 0
data_prep_us = 0
)";

constexpr std::string_view kStatic = R"(# Static RSSI readout: the base station sits in the centre of a 100 x 100 m
# area and beacons once per second; nine sensors answer in 60 ms TDMA slots.
[scenario]
name = static
reproduction = true
seed = 1
until_s = 3600
playground_width_m = 100
playground_height_m = 100

[tdma]
beacon_period_ms = 1000
slot_time_ms = 60
slot_guard_ms = 1
wake_lead_ms = 1
beacon_enabled = true
base_listen = window
inter_round_state = sleep

[output]
energy_sample_s = 1

[node.0]
role = base
x = 50
y = 50

# 3 x 3 grid at 25/50/75 m without the centre, plus one node near the corner.
[node.1]
x = 25
y = 25

[node.2]
x = 50
y = 25

[node.3]
x = 75
y = 25

[node.4]
x = 25
y = 50

[node.5]
x = 75
y = 50

[node.6]
x = 25
y = 75

[node.7]
x = 50
y = 75

[node.8]
x = 75
y = 75

[node.9]
x = 10
y = 10

)";

constexpr std::string_view kMobile = R"(# Mobile RSSI readout: one sensor laps an 80 x 40 m rectangle at 10 m/s and
# transmits at each of its 19 waypoints to a fixed base station.
[scenario]
name = mobile
reproduction = true
seed = 1
until_s = 23
playground_width_m = 100
playground_height_m = 100

# The base only listens here; 1.26 s waypoint spacing would collide with 1 s beacons.
[tdma]
beacon_period_ms = 1000
slot_time_ms = 60
slot_guard_ms = 1
wake_lead_ms = 1
beacon_enabled = false
base_listen = continuous
inter_round_state = sleep

[output]
energy_sample_s = 0.1

[node.0]
role = base
x = 50
y = 50

[node.1]
trigger = waypoint

[mobility.1]
type = rectangle
origin_x = 10
origin_y = 30
width_m = 80
height_m = 40
waypoints = 19
speed_mps = 10
mode = discrete
start_offset_max_m = 1

)";

} // namespace

std::string presetConfig(std::string_view name)
{
    if (name == "static")
        return std::string(kStatic) + std::string(kCommon);
    if (name == "mobile")
        return std::string(kMobile) + std::string(kCommon);
    throw ConfigError("unknown preset '" + std::string(name) + "' (expected static or mobile)");
}

} // namespace wsnsim
