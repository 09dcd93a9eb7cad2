#pragma once

// Shared helpers for the test suites: a deterministic generator for random
// test cases and small independent oracles (kept apart from the library
// code they check).

#include <cmath>
#include <cstdint>

#include "latgame/delay.hpp"

namespace testsupport {

/// splitmix64, fixed here so generated cases are identical on every
/// platform and run.
class CaseRng {
  public:
    explicit CaseRng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * (double(next_u64() >> 11) * 0x1.0p-53);
    }

    int uniform_int(int lo, int hi) { // inclusive bounds
        return lo + int(next_u64() % std::uint64_t(hi - lo + 1));
    }

  private:
    std::uint64_t state_;
};

/// Simpson's rule on a fixed grid; an intentionally simple quadrature
/// oracle, independent of the adaptive integrator under test.
template <class F>
double simpson(F&& f, double a, double b, int intervals = 20000) {
    if (intervals % 2 != 0) ++intervals;
    const double h = (b - a) / intervals;
    double sum = f(a) + f(b);
    for (int i = 1; i < intervals; ++i) sum += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    return sum * h / 3.0;
}

/// Closed-form Gamma CDF for integer shape: 1 - exp(-lx) * sum (lx)^k / k!
inline double gamma_cdf_integer_shape(int shape, double rate, double x) {
    if (x <= 0.0) return 0.0;
    const double lx = rate * x;
    double term = 1.0, series = 1.0;
    for (int k = 1; k < shape; ++k) {
        term *= lx / k;
        series += term;
    }
    return 1.0 - std::exp(-lx) * series;
}

/// Closed-form Gamma CDF for half-integer shape 1.5:
/// erf(sqrt(lx)) - 2*sqrt(lx)*exp(-lx)/sqrt(pi)
inline double gamma_cdf_shape_1p5(double rate, double x) {
    if (x <= 0.0) return 0.0;
    const double lx = rate * x;
    const double s = std::sqrt(lx);
    return std::erf(s) - 2.0 * s * std::exp(-lx) / std::sqrt(M_PI);
}

inline latgame::DelayDistribution random_dist(CaseRng& rng) {
    const double shape = rng.uniform(0.8, 4.0);
    const double mean = rng.uniform(0.1, 6.0);
    return latgame::DelayDistribution::from_mean(shape, mean);
}

} // namespace testsupport
