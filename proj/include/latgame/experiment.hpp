#pragma once

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "latgame/game.hpp"
#include "latgame/sim.hpp"

namespace latgame {

inline constexpr const char* kArtifactVersion = "0.1.0";

enum class RunMode { Analytic, MonteCarlo, Both };

inline const char* to_string(RunMode m) {
    switch (m) {
        case RunMode::Analytic: return "analytic";
        case RunMode::MonteCarlo: return "monte-carlo";
        default: return "both";
    }
}

/// One sweep family: a fixed fast-side delay law and the list of mean
/// ratios gamma to pair it against (dist1 = dist0 with mean scaled by
/// gamma, shape held fixed).
struct SweepRowSpec {
    std::string label;
    DelayDistribution dist0;
    std::vector<double> gammas;
};

struct ExperimentConfig {
    ScenarioSpec scenario;
    StrategyGrid grid;
    RunMode mode = RunMode::Analytic;
    long trials = 100000;
    std::uint64_t seed = 1;
    std::string output_dir = "out";
    std::string preset;
    double mc_delta_0 = 0.0; // strategy pair for monte-carlo-only runs
    double mc_delta_1 = 0.0;
    std::vector<SweepRowSpec> sweep_rows;
    std::vector<std::string> notes;
    std::vector<std::string> warnings;
};

namespace detail {

inline std::vector<SweepRowSpec> d1_rows() {
    return {
        {"D1-mu0.3", DelayDistribution(1.5, 5.0),
         {0.33, 0.5, 1, 2, 5, 10, 10.25, 10.5, 10.75, 11, 11.25, 11.5, 11.66, 12.67,
          13, 13.33, 13.67, 14}},
        {"D1-mu0.6", DelayDistribution(1.5, 2.5),
         {0.33, 0.5, 1, 2, 5, 5.2, 5.4, 5.6, 5.7, 5.83, 6, 6.2, 6.33, 6.5, 6.67,
          6.84, 7, 10}},
        {"D1-mu1", DelayDistribution(2.0, 2.0),
         {0.33, 0.5, 1, 2, 2.2, 2.4, 2.6, 2.8, 3, 3.3, 3.5, 3.6, 3.7, 3.8, 3.9, 4,
          4.1, 4.2, 5, 10}},
    };
}

inline std::vector<SweepRowSpec> d2_rows() {
    const std::vector<double> gammas{0.05, 0.07, 0.11, 0.2, 0.4, 0.5, 0.6, 0.8, 1, 1.2, 1.4};
    return {
        {"D2-mu3.81", DelayDistribution(1.5, 0.394), gammas},
        {"D2-mu4.05", DelayDistribution(1.5, 0.37), gammas},
        {"D2-mu4.29", DelayDistribution(1.5, 0.35), gammas},
    };
}

// The published reference tables were generated with threshold 8 of 12 and
// a per-second value slope of 0.26 (their captions round this to the
// two-thirds rule and 0.25); the reproduction presets pin the generating
// values so the regression targets are exact.
inline ProtocolParams reproduction_params() {
    ProtocolParams p;
    p.n_attestors = 12;
    p.threshold = 8;
    return p;
}

inline ValuationModel reproduction_valuation() { return ValuationModel{0.26, 1.0}; }

template <class T>
std::optional<T> take(const nlohmann::json& j, const char* key, const char* type_name,
                      std::vector<std::string>& errs) {
    if (!j.contains(key)) return std::nullopt;
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        errs.push_back(std::string("field '") + key + "': expected " + type_name);
        return std::nullopt;
    }
}

inline std::optional<DelayDistribution> take_dist(const nlohmann::json& j, const char* key,
                                                  std::vector<std::string>& errs) {
    if (!j.contains(key)) return std::nullopt;
    const auto& d = j.at(key);
    if (!d.is_object()) {
        errs.push_back(std::string("field '") + key + "': expected object {shape, rate}");
        return std::nullopt;
    }
    auto shape = take<double>(d, "shape", "number", errs);
    auto rate = take<double>(d, "rate", "number", errs);
    auto mean = take<double>(d, "mean", "number", errs);
    if (!shape) {
        errs.push_back(std::string("field '") + key + ".shape': required");
        return std::nullopt;
    }
    if (!rate && !mean) {
        errs.push_back(std::string("field '") + key + "': needs 'rate' or 'mean'");
        return std::nullopt;
    }
    try {
        if (rate) return DelayDistribution(*shape, *rate);
        return DelayDistribution::from_mean(*shape, *mean);
    } catch (const std::domain_error& e) {
        errs.push_back(std::string("field '") + key + "': " + e.what());
        return std::nullopt;
    }
}

} // namespace detail

inline nlohmann::json config_to_json(const ExperimentConfig& cfg) {
    nlohmann::json j;
    j["preset"] = cfg.preset;
    j["scenario"] = {
        {"dist0", {{"shape", cfg.scenario.dist0.shape}, {"rate", cfg.scenario.dist0.rate}}},
        {"dist1", {{"shape", cfg.scenario.dist1.shape}, {"rate", cfg.scenario.dist1.rate}}},
        {"protocol",
         {{"slot_len", cfg.scenario.params.slot_len},
          {"attest_deadline", cfg.scenario.params.attest_deadline},
          {"aggregate_deadline", cfg.scenario.params.aggregate_deadline},
          {"n_attestors", cfg.scenario.params.n_attestors},
          {"threshold", cfg.scenario.params.threshold}}},
        {"valuation",
         {{"slope_c", cfg.scenario.valuation.slope_c},
          {"normalizer", cfg.scenario.valuation.normalizer}}}};
    j["grid"] = {{"zeta", cfg.grid.step}, {"tau1", cfg.grid.horizon}};
    j["mode"] = to_string(cfg.mode);
    j["trials"] = cfg.trials;
    j["seed"] = cfg.seed;
    j["output_dir"] = cfg.output_dir;
    return j;
}

/// Parses and validates a JSON experiment configuration. Presets fill the
/// blanks first, explicit fields override, and every violated field is
/// reported in one ValidationError.
inline ExperimentConfig validate_config(const std::string& text) {
    std::vector<std::string> errs;
    nlohmann::json j;
    try {
        j = text.empty() ? nlohmann::json::object() : nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError({std::string("not valid JSON: ") + e.what()});
    }
    if (!j.is_object()) throw ValidationError({"top level must be a JSON object"});

    ExperimentConfig cfg;
    cfg.scenario.params = experiment_params();
    cfg.grid = StrategyGrid::make(0.05, cfg.scenario.params.attest_deadline);

    cfg.preset = detail::take<std::string>(j, "preset", "string", errs).value_or("");
    bool need_dists = false;
    if (cfg.preset == "fig5") {
        cfg.scenario.params = detail::reproduction_params();
        cfg.scenario.valuation = detail::reproduction_valuation();
        cfg.scenario.dist0 = DelayDistribution(2.0, 2.0);
        cfg.scenario.dist1 = DelayDistribution(2.0, 2.0).scaled_mean(10.0);
        cfg.notes.push_back(
            "equilibrium utilities are read from the computed payoff matrix at the "
            "equilibrium cell");
    } else if (cfg.preset == "D1-row" || cfg.preset == "D2-row") {
        cfg.scenario.params = detail::reproduction_params();
        cfg.scenario.valuation = detail::reproduction_valuation();
        cfg.sweep_rows = cfg.preset == "D1-row" ? detail::d1_rows() : detail::d2_rows();
        if (auto row = detail::take<int>(j, "row", "integer", errs)) {
            if (*row < 0 || *row >= int(cfg.sweep_rows.size()))
                errs.push_back("field 'row': out of range");
            else
                cfg.sweep_rows = {cfg.sweep_rows[std::size_t(*row)]};
        }
        cfg.scenario.dist0 = cfg.sweep_rows.empty() ? DelayDistribution(1, 1)
                                                    : cfg.sweep_rows.front().dist0;
        cfg.scenario.dist1 = cfg.scenario.dist0;
    } else if (cfg.preset == "homogeneous-mu") {
        const double mu = detail::take<double>(j, "mu", "number", errs).value_or(0.16);
        const double shape = detail::take<double>(j, "shape", "number", errs).value_or(2.0);
        if (!(mu > 0.0)) errs.push_back("field 'mu': must be > 0");
        if (!(shape > 0.0)) errs.push_back("field 'shape': must be > 0");
        if (errs.empty()) {
            cfg.scenario.dist0 = DelayDistribution::from_mean(shape, mu);
            cfg.scenario.dist1 = cfg.scenario.dist0;
        }
    } else if (cfg.preset.empty()) {
        need_dists = true;
    } else {
        errs.push_back("field 'preset': unknown preset '" + cfg.preset + "'");
    }

    if (j.contains("scenario")) {
        const auto& s = j.at("scenario");
        if (!s.is_object()) {
            errs.push_back("field 'scenario': expected object");
        } else {
            if (auto d = detail::take_dist(s, "dist0", errs)) cfg.scenario.dist0 = *d;
            else if (need_dists) errs.push_back("field 'scenario.dist0': required");
            if (auto d = detail::take_dist(s, "dist1", errs)) cfg.scenario.dist1 = *d;
            else if (need_dists) errs.push_back("field 'scenario.dist1': required");
            if (s.contains("protocol")) {
                const auto& p = s.at("protocol");
                ProtocolParams& pp = cfg.scenario.params;
                pp.slot_len = detail::take<double>(p, "slot_len", "number", errs)
                                  .value_or(pp.slot_len);
                pp.attest_deadline =
                    detail::take<double>(p, "attest_deadline", "number", errs)
                        .value_or(pp.attest_deadline);
                pp.aggregate_deadline =
                    detail::take<double>(p, "aggregate_deadline", "number", errs)
                        .value_or(pp.aggregate_deadline);
                pp.n_attestors = detail::take<int>(p, "n_attestors", "integer", errs)
                                     .value_or(pp.n_attestors);
                pp.threshold =
                    detail::take<int>(p, "threshold", "integer", errs).value_or(pp.threshold);
            }
            if (s.contains("valuation")) {
                const auto& v = s.at("valuation");
                cfg.scenario.valuation.slope_c =
                    detail::take<double>(v, "slope_c", "number", errs)
                        .value_or(cfg.scenario.valuation.slope_c);
                cfg.scenario.valuation.normalizer =
                    detail::take<double>(v, "normalizer", "number", errs)
                        .value_or(cfg.scenario.valuation.normalizer);
            }
        }
    } else if (need_dists) {
        errs.push_back("field 'scenario': required when no preset is given");
    }

    double zeta = cfg.grid.step;
    double tau1 = cfg.scenario.params.attest_deadline;
    if (j.contains("grid")) {
        const auto& g = j.at("grid");
        if (!g.is_object()) {
            errs.push_back("field 'grid': expected object");
        } else {
            zeta = detail::take<double>(g, "zeta", "number", errs).value_or(zeta);
            tau1 = detail::take<double>(g, "tau1", "number", errs).value_or(tau1);
        }
    } else {
        tau1 = cfg.scenario.params.attest_deadline;
    }

    if (auto m = detail::take<std::string>(j, "mode", "string", errs)) {
        if (*m == "analytic") cfg.mode = RunMode::Analytic;
        else if (*m == "monte-carlo") cfg.mode = RunMode::MonteCarlo;
        else if (*m == "both") cfg.mode = RunMode::Both;
        else errs.push_back("field 'mode': must be analytic | monte-carlo | both");
    }
    cfg.trials = detail::take<long>(j, "trials", "integer", errs).value_or(cfg.trials);
    cfg.seed = detail::take<std::uint64_t>(j, "seed", "integer", errs).value_or(cfg.seed);
    cfg.output_dir =
        detail::take<std::string>(j, "output_dir", "string", errs).value_or(cfg.output_dir);
    cfg.mc_delta_0 = detail::take<double>(j, "delta0", "number", errs).value_or(0.0);
    cfg.mc_delta_1 = detail::take<double>(j, "delta1", "number", errs).value_or(0.0);

    if (auto gl = detail::take<std::vector<double>>(j, "gamma_list", "array of numbers", errs)) {
        if (gl->empty()) errs.push_back("field 'gamma_list': must be non-empty");
        for (double g : *gl)
            if (!(g > 0.0)) errs.push_back("field 'gamma_list': entries must be > 0");
        if (cfg.sweep_rows.empty() && !gl->empty())
            cfg.sweep_rows = {{"custom", cfg.scenario.dist0, *gl}};
    }

    for (const auto& v : cfg.scenario.params.violations()) errs.push_back("protocol: " + v);
    if (!cfg.scenario.valuation.valid())
        errs.push_back("valuation: slope_c must be >= 0 and normalizer > 0");
    if (cfg.trials < 1) errs.push_back("field 'trials': must be >= 1");
    try {
        cfg.grid = StrategyGrid::make(zeta, tau1);
    } catch (const std::domain_error& e) {
        errs.push_back(std::string("grid: ") + e.what());
    }

    if (!errs.empty()) throw ValidationError(errs);

    if (!l2_peaked_enough(cfg.scenario.dist0, cfg.scenario.params, cfg.scenario.quad))
        cfg.warnings.push_back(
            "dist0 fails the peakedness bound L2[0,tau1] >= 1/(2*sqrt(tau1)); the "
            "no-delay equilibrium guarantee may not apply");
    if (!l2_peaked_enough(cfg.scenario.dist1, cfg.scenario.params, cfg.scenario.quad))
        cfg.warnings.push_back(
            "dist1 fails the peakedness bound L2[0,tau1] >= 1/(2*sqrt(tau1)); the "
            "no-delay equilibrium guarantee may not apply");
    return cfg;
}

struct MonteCarloCheck {
    double delta_0 = 0.0, delta_1 = 0.0;
    MonteCarloEstimate estimate;
    std::optional<double> analytic_0, analytic_1; // present in 'both' mode
};

struct ExperimentReport {
    std::string version = kArtifactVersion;
    std::string preset;
    ScenarioSpec scenario;
    StrategyGrid grid;
    std::optional<PayoffMatrix> matrix;
    std::vector<PureEquilibrium> equilibria;
    std::optional<XiOptimum> xi0, xi1;
    std::optional<MonteCarloCheck> mc;
    std::vector<std::string> notes, warnings;
    nlohmann::json config_echo;
    double wall_ms = 0.0;
};

/// Runs one configured experiment: payoff matrix + equilibria + per-player
/// single-proposer optimum in analytic mode, a seeded Monte-Carlo estimate
/// in monte-carlo mode, and the cross-check of the two in 'both' mode.
inline ExperimentReport run_experiment(const ExperimentConfig& cfg) {
    const auto t_start = std::chrono::steady_clock::now();
    ExperimentReport rep;
    rep.preset = cfg.preset;
    rep.scenario = cfg.scenario;
    rep.grid = cfg.grid;
    rep.notes = cfg.notes;
    rep.warnings = cfg.warnings;
    rep.config_echo = config_to_json(cfg);

    const bool analytic = cfg.mode != RunMode::MonteCarlo;
    const bool monte = cfg.mode != RunMode::Analytic;

    if (analytic) {
        rep.matrix = build_matrix(cfg.scenario, cfg.grid);
        rep.equilibria = find_psne(*rep.matrix);
        rep.xi0 = optimal_delay_xi(cfg.scenario.dist0, cfg.scenario.params,
                                   cfg.scenario.valuation, cfg.grid);
        rep.xi1 = optimal_delay_xi(cfg.scenario.dist1, cfg.scenario.params,
                                   cfg.scenario.valuation, cfg.grid);
    }
    if (monte) {
        MonteCarloCheck mc;
        mc.delta_0 = cfg.mc_delta_0;
        mc.delta_1 = cfg.mc_delta_1;
        if (analytic && !rep.equilibria.empty()) {
            mc.delta_0 = rep.equilibria.front().delta_0;
            mc.delta_1 = rep.equilibria.front().delta_1;
        }
        mc.estimate = monte_carlo_utility(cfg.scenario, mc.delta_0, mc.delta_1,
                                          cfg.trials, cfg.seed);
        if (cfg.mode == RunMode::Both) {
            mc.analytic_0 = utility_2prop(cfg.scenario, mc.delta_0, mc.delta_1, 0).total;
            mc.analytic_1 = utility_2prop(cfg.scenario, mc.delta_0, mc.delta_1, 1).total;
        }
        rep.mc = mc;
    }

    rep.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - t_start)
                      .count();
    return rep;
}

inline nlohmann::json report_to_json(const ExperimentReport& rep) {
    nlohmann::json j;
    j["version"] = rep.version;
    j["preset"] = rep.preset;
    j["config"] = rep.config_echo;
    j["grid"] = {{"zeta", rep.grid.step}, {"tau1", rep.grid.horizon},
                 {"points", rep.grid.points}};
    if (rep.matrix) {
        j["matrix"] = {{"u0", rep.matrix->u0}, {"u1", rep.matrix->u1}};
    }
    j["equilibria"] = nlohmann::json::array();
    for (const auto& e : rep.equilibria)
        j["equilibria"].push_back({{"delta_0", e.delta_0},
                                   {"delta_1", e.delta_1},
                                   {"u0", e.u0},
                                   {"u1", e.u1}});
    if (rep.xi0)
        j["xi"]["player0"] = {{"delta", rep.xi0->delta}, {"utility", rep.xi0->utility}};
    if (rep.xi1)
        j["xi"]["player1"] = {{"delta", rep.xi1->delta}, {"utility", rep.xi1->utility}};
    if (rep.mc) {
        auto& m = j["monte_carlo"];
        m = {{"delta_0", rep.mc->delta_0},
             {"delta_1", rep.mc->delta_1},
             {"trials", rep.mc->estimate.trials},
             {"mean_0", rep.mc->estimate.mean_0},
             {"mean_1", rep.mc->estimate.mean_1},
             {"stderr_0", rep.mc->estimate.stderr_0},
             {"stderr_1", rep.mc->estimate.stderr_1},
             {"stderr_degenerate", rep.mc->estimate.stderr_degenerate}};
        if (rep.mc->analytic_0) m["analytic_0"] = *rep.mc->analytic_0;
        if (rep.mc->analytic_1) m["analytic_1"] = *rep.mc->analytic_1;
    }
    j["notes"] = rep.notes;
    j["warnings"] = rep.warnings;
    j["wall_ms"] = rep.wall_ms;
    return j;
}

/// Matrices, grid and equilibria parsed back from a serialized report.
struct ReportRoundTrip {
    StrategyGrid grid;
    PayoffMatrix matrix;
    std::vector<PureEquilibrium> equilibria;
};

inline ReportRoundTrip report_from_json(const nlohmann::json& j) {
    ReportRoundTrip rt;
    rt.grid.step = j.at("grid").at("zeta").get<double>();
    rt.grid.horizon = j.at("grid").at("tau1").get<double>();
    rt.grid.points = j.at("grid").at("points").get<std::vector<double>>();
    rt.matrix.grid = rt.grid;
    rt.matrix.u0 = j.at("matrix").at("u0").get<std::vector<std::vector<double>>>();
    rt.matrix.u1 = j.at("matrix").at("u1").get<std::vector<std::vector<double>>>();
    for (const auto& e : j.at("equilibria"))
        rt.equilibria.push_back({e.at("delta_0").get<double>(), e.at("delta_1").get<double>(),
                                 e.at("u0").get<double>(), e.at("u1").get<double>()});
    return rt;
}

// ---- gamma sweeps ----------------------------------------------------------

struct SweepGameResult {
    double gamma = 0.0;
    double mu0 = 0.0, mu1 = 0.0;
    bool ok = false;
    std::string error;
    int psne_count = 0;
    double delta0_ne = 0.0, delta1_ne = 0.0; // lexicographically first PSNE
    double u0_ne = 0.0, u1_ne = 0.0;
    XiOptimum xi0, xi1;
};

struct SweepRowResult {
    std::string label;
    DelayDistribution dist0{1.0, 1.0};
    std::vector<SweepGameResult> games;
};

/// Runs the analytic pipeline for each gamma: dist1 is dist0 with its mean
/// scaled by gamma (shape fixed). Per-gamma failures are recorded and the
/// sweep continues.
inline SweepRowResult sweep_gamma(const ScenarioSpec& base, const StrategyGrid& grid,
                                  const std::string& label,
                                  const std::vector<double>& gammas) {
    if (gammas.empty()) throw std::domain_error("sweep_gamma: gamma list must be non-empty");
    SweepRowResult row;
    row.label = label;
    row.dist0 = base.dist0;
    for (double gamma : gammas) {
        SweepGameResult g;
        g.gamma = gamma;
        g.mu0 = base.dist0.mean();
        try {
            ScenarioSpec spec = base;
            spec.dist1 = base.dist0.scaled_mean(gamma);
            g.mu1 = spec.dist1.mean();
            const PayoffMatrix m = build_matrix(spec, grid);
            const auto psne = find_psne(m);
            g.psne_count = int(psne.size());
            if (!psne.empty()) {
                g.delta0_ne = psne.front().delta_0;
                g.delta1_ne = psne.front().delta_1;
                g.u0_ne = psne.front().u0;
                g.u1_ne = psne.front().u1;
            }
            g.xi0 = optimal_delay_xi(spec.dist0, spec.params, spec.valuation, grid);
            g.xi1 = optimal_delay_xi(spec.dist1, spec.params, spec.valuation, grid);
            g.ok = true;
        } catch (const std::exception& e) {
            g.ok = false;
            g.error = e.what();
        }
        row.games.push_back(std::move(g));
    }
    return row;
}

/// Plot-ready CSV of one sweep row.
inline std::string sweep_to_csv(const SweepRowResult& row) {
    std::string out =
        "gamma,mu0,mu1,delta0_ne,delta1_ne,u0_ne,u1_ne,psne_count,"
        "xi_delta0,xi_util0,xi_delta1,xi_util1,status\n";
    char buf[256];
    for (const auto& g : row.games) {
        if (g.ok && g.psne_count > 0) {
            std::snprintf(buf, sizeof(buf),
                          "%.6g,%.6g,%.6g,%.6g,%.6g,%.6g,%.6g,%d,%.6g,%.6g,%.6g,%.6g,ok\n",
                          g.gamma, g.mu0, g.mu1, g.delta0_ne, g.delta1_ne, g.u0_ne,
                          g.u1_ne, g.psne_count, g.xi0.delta, g.xi0.utility, g.xi1.delta,
                          g.xi1.utility);
        } else if (g.ok) {
            std::snprintf(buf, sizeof(buf),
                          "%.6g,%.6g,%.6g,,,,,0,%.6g,%.6g,%.6g,%.6g,no-pure-equilibrium\n",
                          g.gamma, g.mu0, g.mu1, g.xi0.delta, g.xi0.utility, g.xi1.delta,
                          g.xi1.utility);
        } else {
            std::snprintf(buf, sizeof(buf), "%.6g,%.6g,%.6g,,,,,0,,,,,error\n", g.gamma,
                          g.mu0, g.mu1);
        }
        out += buf;
    }
    return out;
}

// ---- file output -----------------------------------------------------------

inline void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
    os << text;
}

/// Writes an experiment report into `dir`. Format "csv" writes the matrix,
/// equilibria and single-proposer optima as CSV files; "json" writes the
/// full report document.
inline void write_report(const ExperimentReport& rep, const std::filesystem::path& dir,
                         const std::string& format) {
    std::filesystem::create_directories(dir);
    if (format == "json") {
        write_text_file(dir / "report.json", report_to_json(rep).dump(2) + "\n");
        return;
    }
    if (format != "csv") throw std::domain_error("format must be csv or json");
    if (rep.matrix) {
        write_text_file(dir / "matrix_u0.csv", matrix_to_csv(*rep.matrix, 0));
        write_text_file(dir / "matrix_u1.csv", matrix_to_csv(*rep.matrix, 1));
    }
    std::string eq = "delta_0,delta_1,u0,u1\n";
    char buf[160];
    for (const auto& e : rep.equilibria) {
        std::snprintf(buf, sizeof(buf), "%.6g,%.6g,%.6g,%.6g\n", e.delta_0, e.delta_1,
                      e.u0, e.u1);
        eq += buf;
    }
    write_text_file(dir / "equilibria.csv", eq);
    if (rep.xi0 && rep.xi1) {
        std::string xi = "player,delta,utility\n";
        std::snprintf(buf, sizeof(buf), "0,%.6g,%.6g\n1,%.6g,%.6g\n", rep.xi0->delta,
                      rep.xi0->utility, rep.xi1->delta, rep.xi1->utility);
        xi += buf;
        write_text_file(dir / "xi.csv", xi);
    }
    if (rep.mc) {
        std::string mc = "delta_0,delta_1,trials,mean_0,mean_1,stderr_0,stderr_1\n";
        std::snprintf(buf, sizeof(buf), "%.6g,%.6g,%ld,%.9g,%.9g,%.3g,%.3g\n",
                      rep.mc->delta_0, rep.mc->delta_1, rep.mc->estimate.trials,
                      rep.mc->estimate.mean_0, rep.mc->estimate.mean_1,
                      rep.mc->estimate.stderr_0, rep.mc->estimate.stderr_1);
        mc += buf;
        write_text_file(dir / "monte_carlo.csv", mc);
    }
}

} // namespace latgame
