#include "wsnsim/propagation.hpp"

#include <numbers>
#include <stdexcept>
#include <string>

namespace wsnsim {

void PropagationModel::validate() const
{
    if (!(attenuationExponent > 0.0))
        throw std::invalid_argument("attenuation exponent must be positive");
    if (!(effectiveAreaM2 > 0.0))
        throw std::invalid_argument("effective antenna area must be positive");
}

double attenuationDb(double distanceM, const PropagationModel& model)
{
    if (!(distanceM > 0.0))
        throw std::invalid_argument("attenuation undefined at distance " + std::to_string(distanceM) +
                                    " m");
    const double spread = 4.0 * std::numbers::pi * std::pow(distanceM, model.attenuationExponent);
    return 10.0 * std::log10(spread / model.effectiveAreaM2);
}

double receivedPowerDbm(double txPowerDbm, Vec2 tx, Vec2 rx, const PropagationModel& model)
{
    if (tx == rx)
        throw std::invalid_argument("transmitter and receiver share a position");
    return txPowerDbm - attenuationDb(distance(tx, rx), model);
}

} // namespace wsnsim
