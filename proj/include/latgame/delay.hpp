#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

#include "latgame/special.hpp"

namespace latgame {

/// Propagation-delay law of a proposer's block: the time for the block to
/// reach one attestor, Gamma(shape, rate) distributed on [0, inf).
struct DelayDistribution {
    double shape = 1.0; // alpha > 0
    double rate = 1.0;  // lambda > 0, in 1/seconds

    DelayDistribution() = default;

    DelayDistribution(double shape_, double rate_) : shape(shape_), rate(rate_) {
        if (!(shape > 0.0) || !(rate > 0.0))
            throw std::domain_error("DelayDistribution: shape and rate must be positive");
    }

    static DelayDistribution from_mean(double shape_, double mean) {
        if (!(mean > 0.0))
            throw std::domain_error("DelayDistribution: mean must be positive");
        return DelayDistribution(shape_, shape_ / mean);
    }

    /// Slower copy of this law: same shape, mean scaled by `factor`.
    DelayDistribution scaled_mean(double factor) const {
        if (!(factor > 0.0))
            throw std::domain_error("DelayDistribution: scale factor must be positive");
        return DelayDistribution(shape, rate / factor);
    }

    double mean() const { return shape / rate; }
};

/// Gamma density; zero for x < 0.
inline double pdf(const DelayDistribution& d, double x) {
    if (x < 0.0) return 0.0;
    if (x == 0.0) {
        if (d.shape < 1.0) return std::numeric_limits<double>::infinity();
        if (d.shape == 1.0) return d.rate;
        return 0.0;
    }
    return std::exp(d.shape * std::log(d.rate) + (d.shape - 1.0) * std::log(x) -
                    d.rate * x - std::lgamma(d.shape));
}

/// Gamma CDF, the regularized lower incomplete gamma P(shape, rate*x).
inline double cdf(const DelayDistribution& d, double x) {
    if (x <= 0.0) return 0.0;
    return gamma_p(d.shape, d.rate * x);
}

} // namespace latgame
