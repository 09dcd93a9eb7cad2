#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include "latgame/errors.hpp"
#include "latgame/grid.hpp"
#include "latgame/utility.hpp"

namespace latgame {

/// Both players' utilities over the delay grid. u0[a][b] and u1[a][b] are
/// the payoffs when proposer 0 plays points[a] and proposer 1 plays
/// points[b].
struct PayoffMatrix {
    StrategyGrid grid;
    std::vector<std::vector<double>> u0;
    std::vector<std::vector<double>> u1;
};

/// A mutually best-response cell of the discretized game.
struct PureEquilibrium {
    double delta_0 = 0.0;
    double delta_1 = 0.0;
    double u0 = 0.0;
    double u1 = 0.0;
};

/// Evaluates the closed-form utilities over the whole grid. Reach
/// probabilities are computed once per grid point and first-arrival
/// probabilities once per ordered pair.
inline PayoffMatrix build_matrix(const ScenarioSpec& spec, const StrategyGrid& grid) {
    const int n = spec.params.n_attestors;
    const int K = spec.params.threshold;
    const double tau1 = spec.params.attest_deadline;
    const std::size_t m = grid.size();

    std::vector<double> q0(m), q1(m), v(m);
    for (std::size_t a = 0; a < m; ++a) {
        q0[a] = q_reach(spec.dist0, grid.points[a], spec.params);
        q1[a] = q_reach(spec.dist1, grid.points[a], spec.params);
        v[a] = block_value(spec.valuation, grid.points[a], tau1);
    }

    PayoffMatrix out;
    out.grid = grid;
    out.u0.assign(m, std::vector<double>(m, 0.0));
    out.u1.assign(m, std::vector<double>(m, 0.0));
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
            try {
                const double p0 = p_first(spec.dist0, spec.dist1, grid.points[a],
                                          grid.points[b], spec.params, spec.quad);
                const double p1 = p_first(spec.dist1, spec.dist0, grid.points[b],
                                          grid.points[a], spec.params, spec.quad);
                out.u0[a][b] = two_prop_utility_from_probs({q0[a], q1[b], p0, p1},
                                                           v[a], v[b], n, K)
                                   .total;
                out.u1[a][b] = two_prop_utility_from_probs({q1[b], q0[a], p1, p0},
                                                           v[b], v[a], n, K)
                                   .total;
            } catch (const NumericError& e) {
                throw NumericError("cell (delta_0=" + std::to_string(grid.points[a]) +
                                       ", delta_1=" + std::to_string(grid.points[b]) +
                                       "): " + e.what(),
                                   e.achieved_error());
            }
        }
    }
    return out;
}

/// True if cell (a, b) satisfies the mutual best-response condition up to
/// `eps` against the full matrix.
inline bool is_equilibrium(const PayoffMatrix& m, std::size_t a, std::size_t b,
                           double eps = 1e-9) {
    for (std::size_t a2 = 0; a2 < m.grid.size(); ++a2)
        if (m.u0[a2][b] > m.u0[a][b] + eps) return false;
    for (std::size_t b2 = 0; b2 < m.grid.size(); ++b2)
        if (m.u1[a][b2] > m.u1[a][b] + eps) return false;
    return true;
}

/// All pure-strategy equilibria, ordered lexicographically by
/// (delta_0, delta_1). An empty result means no pure equilibrium exists.
inline std::vector<PureEquilibrium> find_psne(const PayoffMatrix& m, double eps = 1e-9) {
    if (eps < 0.0) throw std::domain_error("find_psne: eps must be >= 0");
    const std::size_t size = m.grid.size();

    std::vector<double> col_max(size, -std::numeric_limits<double>::infinity());
    std::vector<double> row_max(size, -std::numeric_limits<double>::infinity());
    for (std::size_t a = 0; a < size; ++a) {
        for (std::size_t b = 0; b < size; ++b) {
            col_max[b] = std::max(col_max[b], m.u0[a][b]);
            row_max[a] = std::max(row_max[a], m.u1[a][b]);
        }
    }

    std::vector<PureEquilibrium> out;
    for (std::size_t a = 0; a < size; ++a)
        for (std::size_t b = 0; b < size; ++b)
            if (m.u0[a][b] >= col_max[b] - eps && m.u1[a][b] >= row_max[a] - eps)
                out.push_back({m.grid.points[a], m.grid.points[b], m.u0[a][b],
                               m.u1[a][b]});
    return out;
}

/// All of `player`'s best responses (within eps) to a fixed opponent delay.
inline std::vector<double> best_response(const PayoffMatrix& m, int player,
                                         double opponent_delta, double eps = 1e-9) {
    if (player != 0 && player != 1) throw std::domain_error("player index must be 0 or 1");
    const std::size_t j = m.grid.index_of(opponent_delta);
    const std::size_t size = m.grid.size();

    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < size; ++k)
        best = std::max(best, player == 0 ? m.u0[k][j] : m.u1[j][k]);

    std::vector<double> out;
    for (std::size_t k = 0; k < size; ++k) {
        const double u = player == 0 ? m.u0[k][j] : m.u1[j][k];
        if (u >= best - eps) out.push_back(m.grid.points[k]);
    }
    return out;
}

/// Single-proposer optimum over the grid; ties break toward the smallest
/// delay.
struct XiOptimum {
    double delta = 0.0;
    double utility = 0.0;
};

inline XiOptimum optimal_delay_xi(const DelayDistribution& dist, const ProtocolParams& params,
                                  const ValuationModel& val, const StrategyGrid& grid) {
    XiOptimum best{grid.points.front(),
                   utility_xi(dist, grid.points.front(), params, val)};
    for (std::size_t k = 1; k < grid.size(); ++k) {
        const double u = utility_xi(dist, grid.points[k], params, val);
        if (u > best.utility) best = {grid.points[k], u};
    }
    return best;
}

/// One player's payoff matrix as CSV: header row/column carry the grid
/// points, entries use 6 significant digits.
inline std::string matrix_to_csv(const PayoffMatrix& m, int player) {
    if (player != 0 && player != 1) throw std::domain_error("player index must be 0 or 1");
    const auto& u = player == 0 ? m.u0 : m.u1;
    char buf[64];
    std::string out = "delta0\\delta1";
    for (double p : m.grid.points) {
        std::snprintf(buf, sizeof(buf), ",%.6g", p);
        out += buf;
    }
    out += '\n';
    for (std::size_t a = 0; a < m.grid.size(); ++a) {
        std::snprintf(buf, sizeof(buf), "%.6g", m.grid.points[a]);
        out += buf;
        for (std::size_t b = 0; b < m.grid.size(); ++b) {
            std::snprintf(buf, sizeof(buf), ",%.6g", u[a][b]);
            out += buf;
        }
        out += '\n';
    }
    return out;
}

} // namespace latgame
