#pragma once

#include <cmath>
#include <stdexcept>

#include "latgame/delay.hpp"
#include "latgame/protocol.hpp"
#include "latgame/quadrature.hpp"
#include "latgame/reach.hpp"
#include "latgame/valuation.hpp"

namespace latgame {

/// One two-proposer scenario: both delay laws plus protocol and valuation.
struct ScenarioSpec {
    DelayDistribution dist0;
    DelayDistribution dist1;
    ProtocolParams params;
    ValuationModel valuation;
    QuadratureConfig quad;

    const DelayDistribution& dist(int player) const {
        if (player != 0 && player != 1) throw std::domain_error("player index must be 0 or 1");
        return player == 0 ? dist0 : dist1;
    }
};

/// Expected utility split into its two confirmation regimes:
///   r1 - both blocks clear the threshold (shared, vote-weighted reward)
///   r2 - only this proposer's block clears it (full reward)
struct UtilityBreakdown {
    double r1 = 0.0;
    double r2 = 0.0;
    double total = 0.0;
};

/// The reach/first-arrival probabilities one utility evaluation needs,
/// all from proposer i's perspective at a fixed delay pair.
struct PairProbabilities {
    double q_i, q_j; // each block reaches one attestor in time
    double p_i, p_j; // that block arrives first with both in time
};

/// Expected vote share of proposer i over the vote split of the w attestors
/// who received both blocks, weighted by the split's probability:
///   sum_z C(w,z) p_i^z p_j^(w-z) * (x-w+z)/(x+y-w)
/// collapsed analytically to [(x-w)s^w + w p_i s^(w-1)]/(x+y-w), s = p_i+p_j.
inline double vote_share_sum(int x, int y, int w, double p_i, double p_j) {
    const int votes = x + y - w; // attestors that received at least one block
    if (votes <= 0) return 0.0;
    if (w == 0) return double(x) / double(votes);
    const double s = p_i + p_j;
    if (s <= 0.0) return 0.0;
    const double sw1 = std::pow(s, w - 1);
    return (double(x - w) * sw1 * s + double(w) * p_i * sw1) / double(votes);
}

/// Same sum evaluated term by term; kept as the slow reference route.
inline double vote_share_sum_direct(int x, int y, int w, double p_i, double p_j) {
    const int votes = x + y - w;
    if (votes <= 0) return 0.0;
    double sum = 0.0;
    for (int z = 0; z <= w; ++z) {
        if (p_i <= 0.0 && z > 0) continue;
        if (p_j <= 0.0 && z < w) continue;
        double lg = log_choose(w, z);
        if (z > 0) lg += double(z) * std::log(p_i);
        if (w - z > 0) lg += double(w - z) * std::log(p_j);
        sum += std::exp(lg) * double(x - w + z) / double(votes);
    }
    return sum;
}

/// Closed-form expected utility of proposer i given the probabilities of a
/// delay pair. Sums over joint attestation counts (x for i, y for j) and the
/// number w of attestors that received both blocks; weights are multinomial
/// over the five per-attestor outcomes (i-first, j-first, only-i, only-j,
/// neither). Binomial coefficients go through log-gamma so n=127 is safe.
inline UtilityBreakdown two_prop_utility_from_probs(const PairProbabilities& pr,
                                                    double v_i, double v_j, int n, int K) {
    if (K < 1 || K > n) throw std::domain_error("two_prop_utility_from_probs: need 1 <= K <= n");
    const double qi_hat = 1.0 - pr.q_i;
    const double qj_hat = 1.0 - pr.q_j;
    const double only_i = pr.q_i * qj_hat;
    const double only_j = pr.q_j * qi_hat;
    const double none = qi_hat * qj_hat;
    const double l_only_i = only_i > 0.0 ? std::log(only_i) : 0.0;
    const double l_only_j = only_j > 0.0 ? std::log(only_j) : 0.0;
    const double l_none = none > 0.0 ? std::log(none) : 0.0;

    double r1 = 0.0;
    for (int x = K; x <= n; ++x) {
        for (int y = K; y <= n; ++y) {
            const int w_lo = std::max(0, x + y - n);
            const int w_hi = std::min(x, y);
            for (int w = w_lo; w <= w_hi; ++w) {
                const int e_only_i = x - w;
                const int e_only_j = y - w;
                const int e_none = n - (x + y - w);
                if (e_only_i > 0 && only_i <= 0.0) continue;
                if (e_only_j > 0 && only_j <= 0.0) continue;
                if (e_none > 0 && none <= 0.0) continue;

                double lw = log_choose(n, w) + log_choose(n - w, e_only_i) +
                            log_choose(n - x, e_only_j);
                lw += e_only_i * l_only_i + e_only_j * l_only_j + e_none * l_none;

                const double share = vote_share_sum(x, y, w, pr.p_i, pr.p_j);
                if (share > 0.0) r1 += std::exp(lw) * share;
            }
        }
    }
    UtilityBreakdown u;
    u.r1 = r1 * (1.0 + 0.5 * (v_i + v_j));
    const double m_i = m_threshold(pr.q_i, n, K);
    const double m_j = m_threshold(pr.q_j, n, K);
    u.r2 = m_i * (1.0 - m_j) * (1.0 + v_i);
    u.total = u.r1 + u.r2;
    return u;
}

/// Probabilities for `for_player` at the delay pair (delta_0, delta_1).
inline PairProbabilities pair_probabilities(const ScenarioSpec& spec, double delta_0,
                                            double delta_1, int for_player) {
    const DelayDistribution& di = spec.dist(for_player);
    const DelayDistribution& dj = spec.dist(1 - for_player);
    const double delta_i = for_player == 0 ? delta_0 : delta_1;
    const double delta_j = for_player == 0 ? delta_1 : delta_0;
    PairProbabilities pr{};
    pr.q_i = q_reach(di, delta_i, spec.params);
    pr.q_j = q_reach(dj, delta_j, spec.params);
    pr.p_i = p_first(di, dj, delta_i, delta_j, spec.params, spec.quad);
    pr.p_j = p_first(dj, di, delta_j, delta_i, spec.params, spec.quad);
    return pr;
}

/// Expected utility of `for_player` in the two-proposer mechanism when the
/// proposers delay by (delta_0, delta_1).
inline UtilityBreakdown utility_2prop(const ScenarioSpec& spec, double delta_0,
                                      double delta_1, int for_player) {
    const double tau1 = spec.params.attest_deadline;
    const double delta_i = for_player == 0 ? delta_0 : delta_1;
    const double delta_j = for_player == 0 ? delta_1 : delta_0;
    const double v_i = block_value(spec.valuation, delta_i, tau1);
    const double v_j = block_value(spec.valuation, delta_j, tau1);
    return two_prop_utility_from_probs(pair_probabilities(spec, delta_0, delta_1, for_player),
                                       v_i, v_j, spec.params.n_attestors,
                                       spec.params.threshold);
}

/// Single-proposer objective: (1 + v(delta)) times the probability of
/// reaching the attestation threshold.
inline double utility_xi(const DelayDistribution& dist, double delta,
                         const ProtocolParams& params, const ValuationModel& val) {
    const double v = block_value(val, delta, params.attest_deadline);
    return (1.0 + v) * m_threshold(q_reach(dist, delta, params), params.n_attestors,
                                   params.threshold);
}

/// Chance a colluding set that controls one proposer slot with probability
/// p_single controls both slots of the two-proposer mechanism.
inline double collusion_probability(double p_single) {
    if (!(p_single >= 0.0) || !(p_single <= 1.0))
        throw std::domain_error("collusion_probability: p must be in [0,1]");
    return p_single * p_single;
}

} // namespace latgame
