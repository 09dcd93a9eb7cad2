#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "latgame/utility.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

using latgame::DelayDistribution;
using latgame::PairProbabilities;
using latgame::ProtocolParams;
using latgame::ScenarioSpec;
using latgame::UtilityBreakdown;
using latgame::ValuationModel;
using testsupport::CaseRng;

namespace {

ProtocolParams small_params(int n, int K) {
    ProtocolParams p;
    p.n_attestors = n;
    p.threshold = K;
    return p;
}

} // namespace

TEST_CASE("block value is linear with domain checks") {
    const ValuationModel val{0.25, 1.0};
    CHECK(latgame::block_value(val, 0.0, 4.0) == 0.0);
    CHECK(latgame::block_value(val, 2.25, 4.0) == Catch::Approx(0.5625));
    CHECK(latgame::block_value(val, 4.0, 4.0) == Catch::Approx(1.0));
    CHECK_THROWS_AS(latgame::block_value(val, -0.1, 4.0), std::domain_error);
    CHECK_THROWS_AS(latgame::block_value(val, 4.1, 4.0), std::domain_error);
}

TEST_CASE("collapsed vote-share sum equals the direct sum") {
    CaseRng rng(555);
    for (int i = 0; i < 100; ++i) {
        const int n = rng.uniform_int(2, 127);
        const int x = rng.uniform_int(1, n);
        const int y = rng.uniform_int(1, n);
        const int w = rng.uniform_int(0, std::min(x, y));
        // p_i + p_j <= 1 always; draw inside the simplex
        const double s = rng.uniform(0.0, 1.0);
        const double pi = s * rng.uniform(0.0, 1.0);
        const double pj = s - pi;
        const double fast = latgame::vote_share_sum(x, y, w, pi, pj);
        const double direct = latgame::vote_share_sum_direct(x, y, w, pi, pj);
        CHECK(fast == Catch::Approx(direct).margin(1e-12));
    }
    // degenerate corners
    CHECK(latgame::vote_share_sum(3, 2, 0, 0.2, 0.1) == Catch::Approx(3.0 / 5.0));
    CHECK(latgame::vote_share_sum(3, 2, 2, 0.0, 0.0) == 0.0);
}

TEST_CASE("closed form equals exhaustive enumeration for small committees") {
    CaseRng rng(20240607);
    int checked = 0;
    for (int n = 2; n <= 5; ++n) {
        for (int rep = 0; rep < 5; ++rep) {
            const int K = rng.uniform_int(1, n);
            const ProtocolParams params = small_params(n, K);
            const ValuationModel val{0.25, 1.0};
            const ScenarioSpec spec{testsupport::random_dist(rng),
                                    testsupport::random_dist(rng), params, val, {}};
            const double d0 = rng.uniform(0.0, params.attest_deadline);
            const double d1 = rng.uniform(0.0, params.attest_deadline);

            for (int player : {0, 1}) {
                const PairProbabilities pr =
                    latgame::pair_probabilities(spec, d0, d1, player);
                const double di = player == 0 ? d0 : d1;
                const double dj = player == 0 ? d1 : d0;
                const double vi = latgame::block_value(val, di, params.attest_deadline);
                const double vj = latgame::block_value(val, dj, params.attest_deadline);
                const UtilityBreakdown closed =
                    latgame::two_prop_utility_from_probs(pr, vi, vj, n, K);
                const double oracle = testsupport::exhaustive_utility(n, K, pr, vi, vj);
                CHECK(closed.total == Catch::Approx(oracle).margin(1e-9));
                CHECK(closed.r1 >= -1e-15);
                CHECK(closed.r2 >= -1e-15);
                CHECK(closed.total == Catch::Approx(closed.r1 + closed.r2).margin(1e-15));
            }
            ++checked;
        }
    }
    CHECK(checked == 20);
}

TEST_CASE("joint attestation weights are a complete probability") {
    // With the vote-share factor replaced by (p_i+p_j)^w and the sums
    // extended to x, y in [0, n], the weights must total 1. Uses the exact
    // complement p_j = q_i*q_j - p_i so the five outcome probabilities sum
    // to 1 by construction.
    CaseRng rng(31337);
    for (int n : {5, 12, 127}) {
        for (int rep = 0; rep < 3; ++rep) {
            const double qi = rng.uniform(0.0, 1.0);
            const double qj = rng.uniform(0.0, 1.0);
            const double pi = qi * qj * rng.uniform(0.0, 1.0);
            const double pj = qi * qj - pi;
            CHECK(testsupport::weight_total(n, qi, qj, pi, pj) ==
                  Catch::Approx(1.0).margin(1e-10));
        }
    }
}

TEST_CASE("no block is confirmable at the deadline delay") {
    const ProtocolParams params = small_params(12, 9);
    const ScenarioSpec spec{DelayDistribution(2.0, 2.0), DelayDistribution(2.0, 0.2),
                            params, ValuationModel{0.25, 1.0}, {}};
    const double tau1 = params.attest_deadline;
    CHECK(latgame::utility_2prop(spec, tau1, tau1, 0).total == 0.0);
    CHECK(latgame::utility_2prop(spec, tau1, tau1, 1).total == 0.0);
}

TEST_CASE("homogeneous scenarios are symmetric between the players") {
    const ProtocolParams params = small_params(12, 9);
    const DelayDistribution d(1.5, 2.5);
    const ScenarioSpec spec{d, d, params, ValuationModel{0.25, 1.0}, {}};
    for (auto [a, b] : {std::pair{0.0, 0.0}, std::pair{0.6, 0.0}, std::pair{1.2, 2.4}}) {
        const double u0 = latgame::utility_2prop(spec, a, b, 0).total;
        const double u1 = latgame::utility_2prop(spec, b, a, 1).total;
        CHECK(u0 == Catch::Approx(u1).margin(1e-12));
    }
}

TEST_CASE("single-proposer objective composes value and threshold mass") {
    const ProtocolParams params = small_params(12, 9);
    const ValuationModel val{0.25, 1.0};
    const DelayDistribution g22(2.0, 2.0);

    CHECK(latgame::utility_xi(g22, params.attest_deadline, params, val) == 0.0);

    CaseRng rng(8);
    for (int i = 0; i < 10; ++i) {
        const double delta = rng.uniform(0.0, params.attest_deadline);
        const double direct =
            (1.0 + latgame::block_value(val, delta, params.attest_deadline)) *
            latgame::m_threshold(latgame::q_reach(g22, delta, params), 12, 9);
        CHECK(latgame::utility_xi(g22, delta, params, val) ==
              Catch::Approx(direct).epsilon(1e-14));
    }

    // zero slope reduces to the threshold mass, maximized at no delay
    const ValuationModel flat{0.0, 1.0};
    double at0 = latgame::utility_xi(g22, 0.0, params, flat);
    CHECK(at0 == Catch::Approx(latgame::m_threshold(latgame::q_reach(g22, 0.0, params), 12, 9)));
    for (double delta : {0.3, 1.1, 2.9})
        CHECK(latgame::utility_xi(g22, delta, params, flat) <= at0);
}

TEST_CASE("reference operating point reproduces the published single-proposer row") {
    // Generating parameters of the published tables: K = 8 of 12,
    // slope 0.26/s (see the experiment presets).
    const ProtocolParams params = small_params(12, 8);
    const ValuationModel val{0.26, 1.0};
    const DelayDistribution fast(2.0, 2.0);
    const DelayDistribution slow(2.0, 0.2);

    CHECK(latgame::utility_xi(fast, 2.3, params, val) == Catch::Approx(1.56292).margin(5e-4));
    CHECK(latgame::utility_xi(slow, 0.0, params, val) ==
          Catch::Approx(0.000421149).margin(1e-8));

    const ScenarioSpec spec{fast, slow, params, val, {}};
    CHECK(latgame::utility_2prop(spec, 0.0, 0.0, 0).total == Catch::Approx(1.00).margin(0.01));
    CHECK(latgame::utility_2prop(spec, 0.05, 0.0, 0).total == Catch::Approx(1.01).margin(0.01));
    CHECK(latgame::utility_2prop(spec, 2.25, 0.0, 0).total == Catch::Approx(1.56).margin(0.01));
}

TEST_CASE("collusion probability squares the single-slot probability") {
    CHECK(latgame::collusion_probability(0.0) == 0.0);
    CHECK(latgame::collusion_probability(1.0) == 1.0);
    CHECK(latgame::collusion_probability(0.3) == Catch::Approx(0.09));
    CHECK_THROWS_AS(latgame::collusion_probability(1.5), std::domain_error);
}
