#include <catch2/catch_amalgamated.hpp>

#include "latgame/game.hpp"
#include "support/helpers.hpp"

using latgame::DelayDistribution;
using latgame::PayoffMatrix;
using latgame::ProtocolParams;
using latgame::ScenarioSpec;
using latgame::StrategyGrid;
using latgame::ValuationModel;

namespace {

ScenarioSpec fig5_spec() {
    ProtocolParams p = latgame::experiment_params();
    p.threshold = 8;
    return ScenarioSpec{DelayDistribution(2.0, 2.0), DelayDistribution(2.0, 0.2), p,
                        ValuationModel{0.26, 1.0}, {}};
}

PayoffMatrix tiny_matrix(std::vector<std::vector<double>> u0,
                         std::vector<std::vector<double>> u1) {
    PayoffMatrix m;
    const double horizon = 0.05 * double(u0.size() - 1);
    m.grid = StrategyGrid::make(0.05, horizon > 0 ? horizon : 0.05);
    m.grid.points.resize(u0.size());
    m.u0 = std::move(u0);
    m.u1 = std::move(u1);
    return m;
}

} // namespace

TEST_CASE("strategy grid construction") {
    const StrategyGrid g = StrategyGrid::make(0.05, 4.0);
    REQUIRE(g.size() == 81);
    CHECK(g.points.front() == 0.0);
    CHECK(g.points.back() == 4.0);
    CHECK(g.points[46] == Catch::Approx(2.3).margin(1e-12));
    CHECK(g.index_of(2.3) == 46);
    CHECK_THROWS_AS(g.index_of(2.31), std::domain_error);
    for (std::size_t i = 1; i < g.size(); ++i) CHECK(g.points[i] > g.points[i - 1]);

    CHECK_THROWS_AS(StrategyGrid::make(0.0, 4.0), std::domain_error);
    CHECK_THROWS_AS(StrategyGrid::make(0.3, 4.0), std::domain_error);

    const StrategyGrid coarse = StrategyGrid::make(4.0, 4.0);
    CHECK(coarse.size() == 2);
}

TEST_CASE("coarse matrix has the zero row at the deadline") {
    ScenarioSpec spec = fig5_spec();
    const StrategyGrid g = StrategyGrid::make(4.0, 4.0); // points {0, 4}
    const PayoffMatrix m = latgame::build_matrix(spec, g);
    REQUIRE(m.u0.size() == 2);
    CHECK(m.u0[1][1] == 0.0);
    CHECK(m.u1[1][1] == 0.0);
    CHECK(m.u0[0][0] > 0.9);
}

TEST_CASE("homogeneous matrix is the transpose of the other player") {
    ProtocolParams p = latgame::experiment_params();
    const DelayDistribution d(2.0, 4.0);
    const ScenarioSpec spec{d, d, p, ValuationModel{0.25, 1.0}, {}};
    const StrategyGrid g = StrategyGrid::make(0.5, 4.0);
    const PayoffMatrix m = latgame::build_matrix(spec, g);
    for (std::size_t a = 0; a < g.size(); ++a)
        for (std::size_t b = 0; b < g.size(); ++b)
            CHECK(m.u1[a][b] == Catch::Approx(m.u0[b][a]).margin(1e-12));
}

TEST_CASE("PSNE search on hand-built matrices") {
    SECTION("1x1 matrix returns its single cell") {
        const PayoffMatrix m = tiny_matrix({{3.0}}, {{4.0}});
        const auto eq = latgame::find_psne(m);
        REQUIRE(eq.size() == 1);
        CHECK(eq[0].u0 == 3.0);
        CHECK(eq[0].u1 == 4.0);
    }
    SECTION("strictly dominant strategies give a unique PSNE at (0,0)") {
        const PayoffMatrix m = tiny_matrix({{2, 2}, {1, 1}}, {{2, 1}, {2, 1}});
        const auto eq = latgame::find_psne(m);
        REQUIRE(eq.size() == 1);
        CHECK(eq[0].delta_0 == 0.0);
        CHECK(eq[0].delta_1 == 0.0);
    }
    SECTION("a cycle has no pure equilibrium") {
        // matching-pennies payoffs
        const PayoffMatrix m = tiny_matrix({{1, 0}, {0, 1}}, {{0, 1}, {1, 0}});
        CHECK(latgame::find_psne(m).empty());
    }
    SECTION("results are lexicographically ordered and re-verified") {
        const PayoffMatrix m = tiny_matrix({{1, 1}, {1, 1}}, {{1, 1}, {1, 1}});
        const auto eq = latgame::find_psne(m);
        REQUIRE(eq.size() == 4);
        CHECK(eq[0].delta_0 <= eq[1].delta_0);
        CHECK((eq[0].delta_0 < eq[1].delta_0 || eq[0].delta_1 < eq[1].delta_1));
        for (const auto& e : eq)
            CHECK(latgame::is_equilibrium(m, m.grid.index_of(e.delta_0),
                                          m.grid.index_of(e.delta_1)));
    }
}

TEST_CASE("player-swapped transpose mirrors the equilibria") {
    ScenarioSpec spec = fig5_spec();
    const StrategyGrid g = StrategyGrid::make(0.5, 4.0);
    const PayoffMatrix m = latgame::build_matrix(spec, g);

    PayoffMatrix swapped;
    swapped.grid = g;
    const std::size_t size = g.size();
    swapped.u0.assign(size, std::vector<double>(size, 0.0));
    swapped.u1.assign(size, std::vector<double>(size, 0.0));
    for (std::size_t a = 0; a < size; ++a)
        for (std::size_t b = 0; b < size; ++b) {
            swapped.u0[a][b] = m.u1[b][a];
            swapped.u1[a][b] = m.u0[b][a];
        }

    const auto eq = latgame::find_psne(m);
    const auto eq_swapped = latgame::find_psne(swapped);
    REQUIRE(eq.size() == eq_swapped.size());
    for (const auto& e : eq) {
        bool found = false;
        for (const auto& s : eq_swapped)
            if (s.delta_0 == e.delta_1 && s.delta_1 == e.delta_0 && s.u0 == e.u1 &&
                s.u1 == e.u0)
                found = true;
        CHECK(found);
    }
}

TEST_CASE("best responses") {
    SECTION("constant payoff row returns every grid point") {
        const PayoffMatrix m = tiny_matrix({{1, 1}, {1, 1}}, {{1, 1}, {1, 1}});
        CHECK(latgame::best_response(m, 0, 0.0).size() == 2);
        CHECK(latgame::best_response(m, 1, 0.05).size() == 2);
    }
    SECTION("strictly decreasing column picks no delay") {
        const PayoffMatrix m = tiny_matrix({{2, 2}, {1, 1}}, {{2, 1}, {2, 1}});
        const auto br0 = latgame::best_response(m, 0, 0.0);
        REQUIRE(br0.size() == 1);
        CHECK(br0[0] == 0.0);
        const auto br1 = latgame::best_response(m, 1, 0.05);
        REQUIRE(br1.size() == 1);
        CHECK(br1[0] == 0.0);
    }
    SECTION("peaked homogeneous scenario: best response to no delay is no delay") {
        ProtocolParams p = latgame::experiment_params();
        const DelayDistribution d = DelayDistribution::from_mean(2.0, 0.16);
        const ScenarioSpec spec{d, d, p, ValuationModel{0.25, 1.0}, {}};
        const StrategyGrid g = StrategyGrid::make(0.25, 4.0);
        const PayoffMatrix m = latgame::build_matrix(spec, g);
        const auto br = latgame::best_response(m, 0, 0.0);
        REQUIRE(br.size() == 1);
        CHECK(br[0] == 0.0);
    }
}

TEST_CASE("single-proposer grid optimum") {
    const StrategyGrid g = StrategyGrid::make(0.05, 4.0);
    ProtocolParams p = latgame::experiment_params();

    SECTION("zero slope: no delay, utility is the threshold mass") {
        const DelayDistribution d(2.0, 2.0);
        const auto [delta, utility] =
            latgame::optimal_delay_xi(d, p, ValuationModel{0.0, 1.0}, g);
        CHECK(delta == 0.0);
        CHECK(utility == Catch::Approx(latgame::m_threshold(
                             latgame::q_reach(d, 0.0, p), 12, 9)));
    }
    SECTION("published reference row at the reproduction operating point") {
        p.threshold = 8;
        const auto [delta, utility] = latgame::optimal_delay_xi(
            DelayDistribution(2.0, 2.0), p, ValuationModel{0.26, 1.0}, g);
        CHECK(delta == Catch::Approx(2.3).margin(1e-12));
        CHECK(utility == Catch::Approx(1.56292).margin(5e-4));
    }
    SECTION("hopelessly slow proposer: everything is nearly zero, ties break low") {
        const auto [delta, utility] = latgame::optimal_delay_xi(
            DelayDistribution(2.0, 0.2), p, ValuationModel{0.25, 1.0}, g);
        CHECK(delta == 0.0);
        CHECK(utility < 1e-4);
    }
}

TEST_CASE("matrix CSV round-trips the grid header and entries") {
    ScenarioSpec spec = fig5_spec();
    const StrategyGrid g = StrategyGrid::make(1.0, 4.0);
    const PayoffMatrix m = latgame::build_matrix(spec, g);
    const std::string csv = latgame::matrix_to_csv(m, 0);

    // 1 header + 5 rows, 1 + 5 columns
    std::size_t rows = 0;
    for (char c : csv) rows += c == '\n';
    CHECK(rows == 6);
    CHECK(csv.substr(0, 13) == "delta0\\delta1");
    CHECK(csv.find(",1,") != std::string::npos); // grid point 1 in header
}
