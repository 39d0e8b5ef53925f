#include "wsnsim/sim_time.hpp"

#include <cmath>
#include <stdexcept>

namespace wsnsim {

SimTime fromSeconds(double seconds)
{
    return SimTime{std::llround(static_cast<long double>(seconds) * 1'000'000'000.0L)};
}

double toSeconds(SimTime t)
{
    return static_cast<double>(t.count()) * 1e-9;
}

SimTime bitOffset(std::int64_t bits, double datarateBaud)
{
    if (!(datarateBaud > 0.0))
        throw std::invalid_argument("datarate must be positive");
    const long double exact = static_cast<long double>(bits) * 1'000'000'000.0L / datarateBaud;
    return SimTime{std::llround(exact)};
}

} // namespace wsnsim
