#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace wsnsim {

inline constexpr std::string_view kRngAlgorithm =
    "mt19937_64; stream seed = splitmix64(run_seed ^ splitmix64(stream_key)); "
    "uniform = ((x >> 11) + 0.5) * 2^-53";

std::uint64_t splitmix64(std::uint64_t x);

/// Independent random substream keyed by (seed, key).
///
/// Nodes draw from their own stream keyed by node id, so adding a node or
/// reordering the configuration never perturbs another node's draws.
class RandomStream {
public:
    RandomStream(std::uint64_t seed, std::uint64_t key);

    /// Uniform on the open interval (0, 1).
    double uniform();

private:
    std::mt19937_64 engine_;
};

} // namespace wsnsim
