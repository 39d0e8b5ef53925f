#pragma once

#include <stdexcept>
#include <string>

namespace wsnsim {

// Invalid scenario input. Raised before any event is scheduled.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Logic fault detected while the simulation is running.
class SimulationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace wsnsim
