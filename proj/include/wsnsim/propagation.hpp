#pragma once

#include "wsnsim/geometry.hpp"

namespace wsnsim {

/// Free-space attenuation 10*log10(4*pi*d^b / A_eff).
///
/// With b = 2 this is the effective-aperture form of the Friis equation: the
/// receive antenna collects A_eff out of the 4*pi*d^2 sphere the power spreads over.
struct PropagationModel {
    double attenuationExponent = 2.0;
    double effectiveAreaM2 = 9.87670e-4;

    void validate() const;
};

/// Throws std::invalid_argument for distance <= 0.
double attenuationDb(double distanceM, const PropagationModel& model);

/// Throws std::invalid_argument for coincident positions.
double receivedPowerDbm(double txPowerDbm, Vec2 tx, Vec2 rx, const PropagationModel& model);

inline double dbmToMw(double dbm)
{
    return std::pow(10.0, dbm / 10.0);
}

inline double mwToDbm(double mw)
{
    return 10.0 * std::log10(mw);
}

} // namespace wsnsim
