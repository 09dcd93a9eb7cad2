// Command-line front end: analyze one scenario, sweep mean ratios, run the
// slot simulator at a strategy pair, or validate a config file.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "latgame/experiment.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitNumeric = 2;

std::string read_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw latgame::ValidationError({"cannot read config file '" + path + "'"});
    std::ostringstream buf;
    buf << is.rdbuf();
    return buf.str();
}

struct CommonOpts {
    std::string config_path;
    std::string preset;
    std::string out_dir;
    std::string format = "csv";
    std::optional<std::uint64_t> seed;
    std::optional<long> trials;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--config", o.config_path, "JSON config file");
    cmd->add_option("--preset", o.preset, "preset name (fig5, D1-row, D2-row, homogeneous-mu)");
    cmd->add_option("--out", o.out_dir, "output directory");
    cmd->add_option("--seed", o.seed, "RNG seed");
    cmd->add_option("--trials", o.trials, "Monte-Carlo trial count");
    cmd->add_option("--format", o.format, "output format: csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
}

latgame::ExperimentConfig load_config(const CommonOpts& o, const std::string& mode = "") {
    nlohmann::json j = nlohmann::json::object();
    if (!o.config_path.empty()) {
        j = nlohmann::json::parse(read_file(o.config_path), nullptr, false);
        if (j.is_discarded())
            throw latgame::ValidationError({"config file is not valid JSON"});
    }
    if (!o.preset.empty()) j["preset"] = o.preset;
    if (!o.out_dir.empty()) j["output_dir"] = o.out_dir;
    if (o.seed) j["seed"] = *o.seed;
    if (o.trials) j["trials"] = *o.trials;
    if (!mode.empty()) j["mode"] = mode;
    return latgame::validate_config(j.dump());
}

void print_warnings(const latgame::ExperimentConfig& cfg) {
    for (const auto& w : cfg.warnings) std::cerr << "warning: " << w << "\n";
}

int cmd_analyze(const CommonOpts& o, const std::string& mode) {
    latgame::ExperimentConfig cfg = load_config(o, mode);
    print_warnings(cfg);

    const latgame::ExperimentReport rep = latgame::run_experiment(cfg);
    latgame::write_report(rep, cfg.output_dir, o.format);

    std::cout << "scenario: dist0 Gamma(" << cfg.scenario.dist0.shape << ", "
              << cfg.scenario.dist0.rate << "), dist1 Gamma(" << cfg.scenario.dist1.shape
              << ", " << cfg.scenario.dist1.rate << "), n=" << cfg.scenario.params.n_attestors
              << ", K=" << cfg.scenario.params.threshold
              << ", slope_c=" << cfg.scenario.valuation.slope_c << "\n";
    if (rep.xi0)
        std::cout << "single-proposer optimum p0: delta=" << rep.xi0->delta
                  << " utility=" << rep.xi0->utility << "\n";
    if (rep.xi1)
        std::cout << "single-proposer optimum p1: delta=" << rep.xi1->delta
                  << " utility=" << rep.xi1->utility << "\n";
    if (rep.matrix) {
        if (rep.equilibria.empty()) {
            std::cout << "no pure equilibrium\n";
        } else {
            std::cout << "pure equilibria (" << rep.equilibria.size() << "):\n";
            for (const auto& e : rep.equilibria)
                std::cout << "  (" << e.delta_0 << ", " << e.delta_1 << ") utilities ("
                          << e.u0 << ", " << e.u1 << ")\n";
        }
    }
    if (rep.mc)
        std::cout << "monte-carlo at (" << rep.mc->delta_0 << ", " << rep.mc->delta_1
                  << "): mean0=" << rep.mc->estimate.mean_0
                  << " +/- " << rep.mc->estimate.stderr_0
                  << ", mean1=" << rep.mc->estimate.mean_1 << " +/- "
                  << rep.mc->estimate.stderr_1 << "\n";
    std::cout << "outputs written to " << cfg.output_dir << "\n";
    return kExitOk;
}

int cmd_sweep(const CommonOpts& o) {
    latgame::ExperimentConfig cfg = load_config(o);
    if (cfg.sweep_rows.empty())
        throw latgame::ValidationError(
            {"sweep needs a sweep preset (D1-row, D2-row) or a gamma_list"});
    print_warnings(cfg);

    std::filesystem::create_directories(cfg.output_dir);
    for (const auto& row : cfg.sweep_rows) {
        latgame::ScenarioSpec base = cfg.scenario;
        base.dist0 = row.dist0;
        base.dist1 = row.dist0;
        const latgame::SweepRowResult res =
            latgame::sweep_gamma(base, cfg.grid, row.label, row.gammas);
        const auto path = std::filesystem::path(cfg.output_dir) / ("sweep_" + row.label + ".csv");
        latgame::write_text_file(path, latgame::sweep_to_csv(res));
        std::cout << "row " << row.label << " (mu0=" << row.dist0.mean() << "): "
                  << res.games.size() << " games -> " << path.string() << "\n";
    }
    return kExitOk;
}

int cmd_simulate(const CommonOpts& o, double delta0, double delta1,
                 const std::string& slot_mode, const std::string& trace_path) {
    latgame::ExperimentConfig cfg = load_config(o);
    print_warnings(cfg);
    const latgame::SlotMode mode = slot_mode == "xi-baseline" ? latgame::SlotMode::XiBaseline
                                                              : latgame::SlotMode::TwoProp;

    std::optional<std::ofstream> trace;
    if (!trace_path.empty()) {
        trace.emplace(trace_path, std::ios::binary);
        if (!*trace)
            throw latgame::ValidationError({"cannot open trace file '" + trace_path + "'"});
    }

    latgame::SlotInputs in{cfg.scenario, delta0, delta1, cfg.seed, mode, 0};
    double sum0 = 0.0, sum1 = 0.0, sq0 = 0.0, sq1 = 0.0;
    for (long t = 0; t < cfg.trials; ++t) {
        in.slot_index = std::uint64_t(t);
        const latgame::SlotOutcome slot = latgame::run_slot(in);
        if (trace) latgame::write_slot_trace(*trace, in, slot);
        sum0 += slot.value0;
        sum1 += slot.value1;
        sq0 += slot.value0 * slot.value0;
        sq1 += slot.value1 * slot.value1;
    }
    const double n = double(cfg.trials);
    const double mean0 = sum0 / n, mean1 = sum1 / n;
    double se0 = 0.0, se1 = 0.0;
    if (cfg.trials > 1) {
        se0 = std::sqrt(std::max(0.0, (sq0 - n * mean0 * mean0) / (n - 1.0)) / n);
        se1 = std::sqrt(std::max(0.0, (sq1 - n * mean1 * mean1) / (n - 1.0)) / n);
    }
    std::cout << "mode " << (mode == latgame::SlotMode::TwoProp ? "two-prop" : "xi-baseline")
              << ", " << cfg.trials << " trials at (" << delta0 << ", " << delta1 << ")\n"
              << "mean reward p0 = " << mean0 << " (stderr " << se0 << ")\n"
              << "mean reward p1 = " << mean1 << " (stderr " << se1 << ")\n";
    if (trace) std::cout << "trace written to " << trace_path << "\n";
    return kExitOk;
}

int cmd_validate(const CommonOpts& o) {
    latgame::ExperimentConfig cfg = load_config(o);
    print_warnings(cfg);
    std::cout << "config ok\n" << latgame::config_to_json(cfg).dump(2) << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"timing-game analytics for two-proposer block proposal"};
    app.require_subcommand(1);

    CommonOpts opt_analyze, opt_sweep, opt_sim, opt_validate;
    std::string analyze_mode;
    double delta0 = 0.0, delta1 = 0.0;
    std::string slot_mode = "two-prop", trace_path;

    CLI::App* analyze = app.add_subcommand("analyze", "analytics for one scenario");
    add_common(analyze, opt_analyze);
    analyze->add_option("--mode", analyze_mode, "analytic | monte-carlo | both")
        ->check(CLI::IsMember({"analytic", "monte-carlo", "both"}));

    CLI::App* sweep = app.add_subcommand("sweep", "equilibria across mean ratios");
    add_common(sweep, opt_sweep);

    CLI::App* simulate = app.add_subcommand("simulate", "Monte-Carlo at a strategy pair");
    add_common(simulate, opt_sim);
    simulate->add_option("--delta0", delta0, "proposer 0 delay (seconds)");
    simulate->add_option("--delta1", delta1, "proposer 1 delay (seconds)");
    simulate->add_option("--mode", slot_mode, "two-prop | xi-baseline")
        ->check(CLI::IsMember({"two-prop", "xi-baseline"}));
    simulate->add_option("--trace", trace_path, "write per-slot JSON lines here");

    CLI::App* validate = app.add_subcommand("validate", "check a config file");
    add_common(validate, opt_validate);

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) return cmd_analyze(opt_analyze, analyze_mode);
        if (sweep->parsed()) return cmd_sweep(opt_sweep);
        if (simulate->parsed()) return cmd_simulate(opt_sim, delta0, delta1, slot_mode, trace_path);
        if (validate->parsed()) return cmd_validate(opt_validate);
    } catch (const latgame::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitValidation;
    } catch (const latgame::NumericError& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    }
    return kExitOk;
}
