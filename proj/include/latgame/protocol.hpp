#pragma once

#include <string>
#include <vector>

namespace latgame {

/// Slot timing and attestation thresholds.
///
/// A slot lasts slot_len seconds. Blocks must reach attestors by
/// attest_deadline; attestations are aggregated by aggregate_deadline; a
/// block needs at least `threshold` of `n_attestors` attestations to be
/// confirmable.
struct ProtocolParams {
    double slot_len = 12.0;           // tau
    double attest_deadline = 4.0;     // tau1
    double aggregate_deadline = 8.0;  // tau2
    int n_attestors = 127;            // n
    int threshold = 85;               // K

    std::vector<std::string> violations() const {
        std::vector<std::string> v;
        if (!(attest_deadline > 0.0)) v.push_back("attest_deadline must be > 0");
        if (!(attest_deadline < aggregate_deadline))
            v.push_back("attest_deadline must be < aggregate_deadline");
        if (!(aggregate_deadline < slot_len))
            v.push_back("aggregate_deadline must be < slot_len");
        if (n_attestors < 1) v.push_back("n_attestors must be >= 1");
        if (threshold < 1 || threshold > n_attestors)
            v.push_back("threshold must satisfy 1 <= threshold <= n_attestors");
        return v;
    }

    bool valid() const { return violations().empty(); }
};

/// Two-thirds supermajority rule used by the mainnet preset.
inline int supermajority_threshold(int n) { return (2 * n) / 3 + 1; }

/// Mainnet-scale committee: n=127, K=85.
inline ProtocolParams ethereum_params() {
    ProtocolParams p;
    p.n_attestors = 127;
    p.threshold = supermajority_threshold(127);
    return p;
}

/// Small committee used throughout the bundled experiments: n=12, K=9.
inline ProtocolParams experiment_params() {
    ProtocolParams p;
    p.n_attestors = 12;
    p.threshold = supermajority_threshold(12);
    return p;
}

} // namespace latgame
