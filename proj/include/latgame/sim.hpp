#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "latgame/rng.hpp"
#include "latgame/sha256.hpp"
#include "latgame/utility.hpp"

namespace latgame {

enum class SlotMode { TwoProp, XiBaseline };

inline const char* to_string(SlotMode m) {
    return m == SlotMode::TwoProp ? "two-prop" : "xi-baseline";
}

/// One simulated slot. In xi-baseline mode only proposer 0 participates.
struct SlotInputs {
    ScenarioSpec spec;
    double delta_0 = 0.0;
    double delta_1 = 0.0;
    std::uint64_t seed = 0;
    SlotMode mode = SlotMode::TwoProp;
    std::uint64_t slot_index = 0;
};

/// What a single attestor saw: block delivery times (absent when past the
/// attestation deadline) and which block arrived first. A block counts as
/// first whenever the other one was not received at all.
struct AttestorObservation {
    std::optional<double> arrival_0;
    std::optional<double> arrival_1;
    int first_block = -1; // 0, 1, or -1 when neither block arrived
};

/// Commitment standing in for a proposed block when rolling the on-chain
/// die; exactly 32 bytes.
struct BlockCommitment {
    Digest root{};
};

/// Tally of one slot: attestation counts, first-arrival votes, the
/// confirmed block (-1 if the slot is missed), reward fractions and the
/// realized normalized rewards.
struct SlotOutcome {
    int x0 = 0, x1 = 0; // attestations per block
    int y0 = 0, y1 = 0; // first-arrival votes per block
    int confirmed = -1; // 0, 1, or -1
    double r0 = 0.0, r1 = 0.0;
    double value0 = 0.0, value1 = 0.0;
    std::vector<Digest> commitments;
};

/// Unbiased selection among committed blocks: hash all the roots' hashes
/// together and pick the root whose hash is closest in Hamming distance.
///
/// Distance ties between distinct digests happen with probability ~3.5%
/// (two Binomial(256, 1/2) draws coinciding), so a fixed always-lowest rule
/// would bias index 0 by ~1.8%. Ties therefore break by lexicographic hash
/// order, which is deterministic and conditionally uniform; equal hashes
/// (identical roots) fall back to the lower index.
inline int die_roll(const std::vector<BlockCommitment>& roots) {
    if (roots.empty()) throw std::domain_error("die_roll: need at least one commitment");

    std::vector<Digest> hashed;
    hashed.reserve(roots.size());
    Sha256 outer;
    for (const auto& r : roots) {
        hashed.push_back(Sha256::hash(r.root.data(), r.root.size()));
        outer.update(hashed.back().data(), hashed.back().size());
    }
    const Digest combined = outer.finish();

    int best = 0;
    int best_dist = 8 * int(combined.size()) + 1;
    for (std::size_t d = 0; d < hashed.size(); ++d) {
        int dist = 0;
        for (std::size_t i = 0; i < combined.size(); ++i)
            dist += __builtin_popcount(unsigned(combined[i] ^ hashed[d][i]));
        if (dist < best_dist || (dist == best_dist && hashed[d] < hashed[best])) {
            best_dist = dist;
            best = int(d);
        }
    }
    return best;
}

/// Reward fractions per the sharing rule: a lone confirmable block takes
/// everything; two confirmable blocks split the reward in proportion to
/// first-arrival votes; no confirmable block earns nothing.
inline std::pair<double, double> reward_share(int x0, int x1, int y0, int y1, int K) {
    if (x0 < 0 || x1 < 0 || y0 < 0 || y1 < 0 || y0 > x0 || y1 > x1 || K < 1)
        throw std::domain_error("reward_share: inconsistent counts");
    const bool c0 = x0 >= K;
    const bool c1 = x1 >= K;
    if (c0 && c1) {
        if (y0 + y1 == 0) return {0.5, 0.5};
        return {double(y0) / double(y0 + y1), double(y1) / double(y0 + y1)};
    }
    if (c0) return {1.0, 0.0};
    if (c1) return {0.0, 1.0};
    return {0.0, 0.0};
}

namespace detail {
inline Digest slot_commitment(std::uint64_t seed, std::uint64_t slot_index, int proposer) {
    std::uint8_t preimage[17];
    for (int i = 0; i < 8; ++i) preimage[i] = std::uint8_t(seed >> (8 * i));
    for (int i = 0; i < 8; ++i) preimage[8 + i] = std::uint8_t(slot_index >> (8 * i));
    preimage[16] = std::uint8_t(proposer);
    return Sha256::hash(preimage, sizeof(preimage));
}
} // namespace detail

/// Simulates one slot end to end: per-attestor delivery sampling, the
/// attestation/vote tally at the deadline, confirmation (with the die roll
/// when both blocks qualify) and reward assignment. Deterministic in
/// (seed, slot_index).
inline SlotOutcome run_slot(const SlotInputs& in) {
    const ProtocolParams& params = in.spec.params;
    const double tau1 = params.attest_deadline;
    detail::check_delay_range(in.delta_0, tau1, "run_slot");
    detail::check_delay_range(in.delta_1, tau1, "run_slot");
    const bool two_prop = in.mode == SlotMode::TwoProp;

    Rng rng = Rng::stream(in.seed, in.slot_index);
    SlotOutcome out;
    for (int a = 0; a < params.n_attestors; ++a) {
        AttestorObservation obs;
        const double t0 = in.delta_0 + rng.next_gamma(in.spec.dist0.shape, in.spec.dist0.rate);
        if (t0 <= tau1) obs.arrival_0 = t0;
        if (two_prop) {
            const double t1 =
                in.delta_1 + rng.next_gamma(in.spec.dist1.shape, in.spec.dist1.rate);
            if (t1 <= tau1) obs.arrival_1 = t1;
        }

        if (obs.arrival_0 && obs.arrival_1) {
            if (*obs.arrival_0 == *obs.arrival_1) // quantized-timestamp tie
                obs.first_block = rng.next_coin() ? 1 : 0;
            else
                obs.first_block = *obs.arrival_0 < *obs.arrival_1 ? 0 : 1;
        } else if (obs.arrival_0) {
            obs.first_block = 0;
        } else if (obs.arrival_1) {
            obs.first_block = 1;
        }

        out.x0 += obs.arrival_0.has_value();
        out.x1 += obs.arrival_1.has_value();
        out.y0 += obs.first_block == 0;
        out.y1 += obs.first_block == 1;
    }

    const int K = params.threshold;
    const bool c0 = out.x0 >= K;
    const bool c1 = two_prop && out.x1 >= K;
    out.commitments.push_back(detail::slot_commitment(in.seed, in.slot_index, 0));
    if (two_prop) out.commitments.push_back(detail::slot_commitment(in.seed, in.slot_index, 1));

    if (c0 && c1) {
        out.confirmed = die_roll({BlockCommitment{out.commitments[0]},
                                  BlockCommitment{out.commitments[1]}});
    } else if (c0) {
        out.confirmed = 0;
    } else if (c1) {
        out.confirmed = 1;
    }

    auto [r0, r1] = reward_share(out.x0, out.x1, out.y0, out.y1, K);
    out.r0 = r0;
    out.r1 = r1;
    if (out.confirmed >= 0) {
        const double delta_w = out.confirmed == 0 ? in.delta_0 : in.delta_1;
        const double pot = 1.0 + block_value(in.spec.valuation, delta_w, tau1);
        out.value0 = r0 * pot;
        out.value1 = r1 * pot;
    }
    return out;
}

struct MonteCarloEstimate {
    double mean_0 = 0.0, mean_1 = 0.0;
    double stderr_0 = 0.0, stderr_1 = 0.0;
    long trials = 0;
    bool stderr_degenerate = false; // too few trials for a spread estimate
};

/// Mean realized rewards over independent seeded slots, with standard
/// errors. Trial t uses the deterministic stream (seed, t).
inline MonteCarloEstimate monte_carlo_utility(const ScenarioSpec& spec, double delta_0,
                                              double delta_1, long trials,
                                              std::uint64_t seed,
                                              SlotMode mode = SlotMode::TwoProp) {
    if (trials < 1) throw std::domain_error("monte_carlo_utility: trials must be >= 1");
    SlotInputs in{spec, delta_0, delta_1, seed, mode, 0};

    double sum0 = 0.0, sum1 = 0.0, sq0 = 0.0, sq1 = 0.0;
    for (long t = 0; t < trials; ++t) {
        in.slot_index = std::uint64_t(t);
        const SlotOutcome slot = run_slot(in);
        sum0 += slot.value0;
        sum1 += slot.value1;
        sq0 += slot.value0 * slot.value0;
        sq1 += slot.value1 * slot.value1;
    }

    MonteCarloEstimate est;
    est.trials = trials;
    est.mean_0 = sum0 / double(trials);
    est.mean_1 = sum1 / double(trials);
    if (trials > 1) {
        const double var0 = std::max(0.0, (sq0 - trials * est.mean_0 * est.mean_0) / double(trials - 1));
        const double var1 = std::max(0.0, (sq1 - trials * est.mean_1 * est.mean_1) / double(trials - 1));
        est.stderr_0 = std::sqrt(var0 / double(trials));
        est.stderr_1 = std::sqrt(var1 / double(trials));
    } else {
        est.stderr_degenerate = true;
    }
    return est;
}

/// One JSON line per slot: inputs, tallies, confirmation, rewards, and the
/// commitment digests in lowercase hex.
inline void write_slot_trace(std::ostream& os, const SlotInputs& in, const SlotOutcome& out) {
    os << "{\"seed\":" << in.seed << ",\"slot\":" << in.slot_index << ",\"mode\":\""
       << to_string(in.mode) << "\",\"delta_0\":" << in.delta_0
       << ",\"delta_1\":" << in.delta_1 << ",\"x0\":" << out.x0 << ",\"x1\":" << out.x1
       << ",\"y0\":" << out.y0 << ",\"y1\":" << out.y1 << ",\"confirmed\":" << out.confirmed
       << ",\"r0\":" << out.r0 << ",\"r1\":" << out.r1 << ",\"value0\":" << out.value0
       << ",\"value1\":" << out.value1 << ",\"commitments\":[";
    for (std::size_t i = 0; i < out.commitments.size(); ++i) {
        if (i) os << ',';
        os << '"' << to_hex(out.commitments[i]) << '"';
    }
    os << "]}\n";
}

} // namespace latgame
