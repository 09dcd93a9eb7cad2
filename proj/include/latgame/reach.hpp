#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "latgame/delay.hpp"
#include "latgame/protocol.hpp"
#include "latgame/quadrature.hpp"
#include "latgame/special.hpp"

namespace latgame {

namespace detail {
inline void check_delay_range(double delta, double tau1, const char* who) {
    if (!(delta >= 0.0) || !(delta <= tau1))
        throw std::domain_error(std::string(who) + ": delay must lie in [0, attest_deadline]");
}
} // namespace detail

/// Probability that a block delayed by `delta` reaches one attestor by the
/// attestation deadline: q(delta) = F(tau1 - delta).
inline double q_reach(const DelayDistribution& dist, double delta,
                      const ProtocolParams& params) {
    detail::check_delay_range(delta, params.attest_deadline, "q_reach");
    return cdf(dist, params.attest_deadline - delta);
}

/// Probability that block i reaches an attestor strictly before block j and
/// both arrive by the deadline. Block i is sent at delta_i, block j at
/// delta_j; arrival times are delta + sampled propagation delay.
///
/// The inner integral over j's delay is the CDF difference
///   F_j(tau1 - delta_j) - F_j(max(0, x + delta_i - delta_j)),
/// so only the outer integral needs quadrature.
inline double p_first(const DelayDistribution& dist_i, const DelayDistribution& dist_j,
                      double delta_i, double delta_j, const ProtocolParams& params,
                      const QuadratureConfig& quad = {}) {
    const double tau1 = params.attest_deadline;
    detail::check_delay_range(delta_i, tau1, "p_first");
    detail::check_delay_range(delta_j, tau1, "p_first");

    const double upper_i = tau1 - delta_i;
    if (upper_i <= 0.0) return 0.0;

    const double cdf_j_deadline = cdf(dist_j, tau1 - delta_j);
    if (cdf_j_deadline <= 0.0) return 0.0;

    const double shift = delta_i - delta_j;
    auto integrand = [&](double x) {
        const double lo = std::max(0.0, x + shift);
        const double tail = cdf_j_deadline - cdf(dist_j, lo);
        return tail > 0.0 ? pdf(dist_i, x) * tail : 0.0;
    };
    double p = integrate_or_throw(integrand, 0.0, upper_i, quad);

    // Mathematically p lies in [0, q_i*q_j]; trim quadrature noise.
    const double cap = cdf(dist_i, upper_i) * cdf_j_deadline;
    return std::clamp(p, 0.0, cap);
}

/// Upper-tail binomial probability: chance at least K of n independent
/// attestors receive the block, each with probability q. Evaluated in log
/// space so large n does not overflow.
inline double m_threshold(double q, int n, int K) {
    if (!(q >= 0.0) || !(q <= 1.0)) throw std::domain_error("m_threshold: q must be in [0,1]");
    if (K < 1 || K > n) throw std::domain_error("m_threshold: need 1 <= K <= n");
    if (q == 0.0) return 0.0;
    if (q == 1.0) return 1.0;

    const double lq = std::log(q);
    const double lq1 = std::log1p(-q);
    double max_log = -std::numeric_limits<double>::infinity();
    std::vector<double> logs;
    logs.reserve(n - K + 1);
    for (int k = K; k <= n; ++k) {
        const double lg = log_choose(n, k) + k * lq + (n - k) * lq1;
        logs.push_back(lg);
        max_log = std::max(max_log, lg);
    }
    double sum = 0.0;
    for (double lg : logs) sum += std::exp(lg - max_log);
    return std::min(1.0, std::exp(max_log) * sum);
}

/// Restricted L2 norm of a density on [a, b]: (integral of f^2)^(1/2).
/// Measures how concentrated a delay law is on the interval.
template <class Density>
double restricted_l2_of(Density&& f, double a, double b, const QuadratureConfig& quad = {}) {
    if (!(a >= 0.0) || !(b >= a)) throw std::domain_error("restricted_l2: need 0 <= a <= b");
    if (a == b) return 0.0;
    auto sq = [&](double x) {
        const double fx = f(x);
        return fx * fx;
    };
    return std::sqrt(integrate_or_throw(sq, a, b, quad));
}

inline double restricted_l2(const DelayDistribution& dist, double a, double b,
                            const QuadratureConfig& quad = {}) {
    return restricted_l2_of([&](double x) { return pdf(dist, x); }, a, b, quad);
}

/// Peakedness condition for the homogeneous no-delay equilibrium: the
/// density's restricted L2 norm on [0, tau1] is at least 1/(2*sqrt(tau1)).
inline bool l2_peaked_enough(const DelayDistribution& dist, const ProtocolParams& params,
                             const QuadratureConfig& quad = {}) {
    const double tau1 = params.attest_deadline;
    return restricted_l2(dist, 0.0, tau1, quad) >= 0.5 / std::sqrt(tau1);
}

} // namespace latgame
