#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace latgame {

/// Deterministic 64-bit generator (splitmix64). Used for the slot
/// simulator so results are reproducible across platforms; the standard
/// library distributions are implementation-defined and are avoided.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    /// Independent stream for (seed, stream_index), e.g. one per trial.
    static Rng stream(std::uint64_t seed, std::uint64_t stream_index) {
        Rng mixer(seed ^ (0x9e3779b97f4a7c15ULL * (stream_index + 1)));
        return Rng(mixer.next_u64());
    }

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform on [0, 1) with 53 random bits.
    double next_u01() { return double(next_u64() >> 11) * 0x1.0p-53; }

    bool next_coin() { return (next_u64() & 1) != 0; }

    /// Standard normal via the Marsaglia polar method.
    double next_normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * next_u01() - 1.0;
            v = 2.0 * next_u01() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        has_spare_ = true;
        return u * f;
    }

    /// Gamma(shape, rate) sample, Marsaglia-Tsang squeeze method.
    double next_gamma(double shape, double rate) {
        if (!(shape > 0.0) || !(rate > 0.0))
            throw std::domain_error("next_gamma: shape and rate must be positive");
        if (shape < 1.0) {
            // boost: G(a) = G(a+1) * U^(1/a)
            const double u = next_u01();
            return next_gamma(shape + 1.0, rate) * std::pow(u, 1.0 / shape);
        }
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x, v;
            do {
                x = next_normal();
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            const double u = next_u01();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * v / rate;
            if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v)))
                return d * v / rate;
        }
    }

  private:
    std::uint64_t state_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

} // namespace latgame
