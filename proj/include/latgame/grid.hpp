#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace latgame {

/// Discretized strategy space {0, step, 2*step, ..., horizon}. Points are
/// built from integer microsecond multiples so reference delays like 2.3
/// land exactly on the grid regardless of accumulation order.
struct StrategyGrid {
    double step = 0.05;
    double horizon = 4.0;
    std::vector<double> points;

    static StrategyGrid make(double step, double horizon) {
        if (!(step > 0.0)) throw std::domain_error("StrategyGrid: step must be > 0");
        if (!(horizon > 0.0)) throw std::domain_error("StrategyGrid: horizon must be > 0");
        const std::int64_t step_u = std::llround(step * 1e6);
        const std::int64_t horizon_u = std::llround(horizon * 1e6);
        if (step_u <= 0 || horizon_u < step_u || horizon_u % step_u != 0)
            throw std::domain_error(
                "StrategyGrid: horizon must be a whole multiple of step");
        StrategyGrid g;
        g.step = double(step_u) / 1e6;
        g.horizon = double(horizon_u) / 1e6;
        const std::int64_t count = horizon_u / step_u;
        g.points.reserve(count + 1);
        for (std::int64_t k = 0; k <= count; ++k)
            g.points.push_back(double(k * step_u) / 1e6);
        return g;
    }

    std::size_t size() const { return points.size(); }

    /// Index of an on-grid delay; throws if `delta` is not a grid point.
    std::size_t index_of(double delta) const {
        const std::int64_t step_u = std::llround(step * 1e6);
        const std::int64_t delta_u = std::llround(delta * 1e6);
        if (delta_u < 0 || delta_u % step_u != 0 ||
            delta_u / step_u >= std::int64_t(points.size()))
            throw std::domain_error("StrategyGrid: delay is not a grid point");
        return std::size_t(delta_u / step_u);
    }
};

} // namespace latgame
