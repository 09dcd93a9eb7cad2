#pragma once

#include <stdexcept>

namespace latgame {

/// Linear model of the extra transaction value a proposer captures by
/// delaying its block. Utilities are expressed in units of `normalizer`
/// (the expected value of an undelayed block), so v(delta) = slope_c*delta.
struct ValuationModel {
    double slope_c = 0.25;   // per second
    double normalizer = 1.0; // informational only

    bool valid() const { return slope_c >= 0.0 && normalizer > 0.0; }
};

/// Extra value captured by delaying `delta` seconds, in normalized units.
inline double block_value(const ValuationModel& val, double delta, double tau1) {
    if (!(delta >= 0.0) || !(delta <= tau1))
        throw std::domain_error("block_value: delta must lie in [0, tau1]");
    return val.slope_c * delta;
}

} // namespace latgame
