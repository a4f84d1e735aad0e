// Experiment runner for the two-way untrusted-relay secrecy simulator.
//
//   secrecy_sim sweep    --config net.cfg --sweep snr_db:0:40:2 --out out.csv
//   secrecy_sim validate --out report.json
//   secrecy_sim preset fig2|fig3|fig4 --out <prefix>
//
// Exit codes: 0 success, 1 validation failure, 2 bad input.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "secrecy/sweep.hpp"
#include "secrecy/validate.hpp"

namespace {

using namespace secrecy;

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string item;
    while (std::getline(is, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::vector<double> parse_sweep_range(const std::string& text, SweepKind& kind) {
    // kind:start:stop:step  or  kind:v1,v2,v3
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw CLI::ValidationError("--sweep", "expected kind:start:stop:step");
    kind = sweep_kind_from_string(text.substr(0, colon));
    const std::string rest = text.substr(colon + 1);
    std::vector<double> values;
    if (rest.find(':') == std::string::npos) {
        for (const auto& v : split_list(rest)) values.push_back(std::stod(v));
        return values;
    }
    std::istringstream is(rest);
    double start, stop, step;
    char c1, c2;
    if (!(is >> start >> c1 >> stop >> c2 >> step) || c1 != ':' || c2 != ':' || step <= 0.0)
        throw CLI::ValidationError("--sweep", "expected kind:start:stop:step");
    for (double v = start; v <= stop + 1e-9 * step; v += step) values.push_back(v);
    return values;
}

struct CommonArgs {
    std::string config_path;
    std::string out_path = "sweep.csv";
    std::int64_t trials = 100000;
    std::uint64_t seed = 1;
    std::string strategies = "opa_numeric";
    std::string methods = "monte_carlo";
    std::string sweep = "snr_db:0:40:2";
    bool lsma = false;
    int threads = 0;
};

int run_one_sweep(const SweepSpec& spec, const NetworkConfig& cfg, const NodePositions& pos,
                  const std::string& path) {
    const SweepSummary s = run_sweep_to_file(spec, cfg, pos, path);
    std::cout << "wrote " << s.rows.size() << " rows to " << path << "\n";
    return 0;
}

int cmd_sweep(const CommonArgs& args) {
    NetworkConfig cfg;
    NodePositions pos;
    if (!args.config_path.empty()) {
        const LoadedConfig loaded = load_config_file(args.config_path);
        cfg = loaded.config;
        if (loaded.had_geometry) pos = loaded.positions;
        for (const auto& w : loaded.warnings) std::cerr << "warning: " << w << "\n";
    }
    SweepSpec spec;
    spec.values = parse_sweep_range(args.sweep, spec.kind);
    for (const auto& s : split_list(args.strategies))
        spec.strategies.push_back(power_strategy_from_string(s));
    for (const auto& m : split_list(args.methods))
        spec.methods.push_back(essr_method_from_string(m));
    spec.trials = args.trials;
    spec.seed = args.seed;
    spec.lsma_sinr = args.lsma;
    spec.threads = args.threads;
    return run_one_sweep(spec, cfg, pos, args.out_path);
}

// Figure presets: the Rayleigh two-way relay testbed with BS(-1,0), MU(1,0),
// relay at the origin and the jammer at (0.3, 0.4), path-loss exponent 2.
NetworkConfig preset_config() {
    NetworkConfig cfg;
    cfg.n_bs = 64;
    cfg.n_fj = 1;
    cfg.mu_br = 1.0;
    cfg.mu_mr = 1.0;
    cfg.mu_fr = 4.0;
    cfg.alpha = 2.0;
    return cfg;
}

int cmd_preset(const std::string& name, const CommonArgs& args) {
    NetworkConfig cfg = preset_config();
    NodePositions pos;
    const std::string prefix =
        args.out_path == "sweep.csv" ? std::string("") : args.out_path;
    auto path_for = [&](const std::string& stem) {
        return prefix.empty() ? stem + ".csv" : prefix + "_" + stem + ".csv";
    };

    SweepSpec spec;
    spec.trials = args.trials;
    spec.seed = args.seed;
    spec.threads = args.threads;

    if (name == "fig2") {
        spec.kind = SweepKind::SnrDb;
        for (double v = 0.0; v <= 40.0; v += 2.0) spec.values.push_back(v);
        spec.strategies = {PowerStrategy::OpaNumeric, PowerStrategy::Epa,
                           PowerStrategy::WoFjOpa};
        spec.methods = {EssrMethod::MonteCarlo};
        return run_one_sweep(spec, cfg, pos, path_for("fig2"));
    }
    if (name == "fig3") {
        cfg.n_bs = 256;
        spec.kind = SweepKind::SnrDb;
        for (double v = 10.0; v <= 50.0; v += 2.5) spec.values.push_back(v);
        spec.strategies = {PowerStrategy::OpaLsma};
        spec.methods = {EssrMethod::MonteCarlo, EssrMethod::ClosedForm, EssrMethod::Asymptotic};
        spec.lsma_sinr = true;
        int rc = 0;
        for (int n_fj : {4, 8, 16}) {
            cfg.n_fj = n_fj;
            rc |= run_one_sweep(spec, cfg, pos, path_for("fig3_nfj" + std::to_string(n_fj)));
        }
        return rc;
    }
    if (name == "fig4") {
        cfg.rho = 100.0;  // 20 dB
        spec.kind = SweepKind::FjDistance;
        for (double d = 0.1; d <= 1.401; d += 0.1) spec.values.push_back(d);
        spec.strategies = {PowerStrategy::OpaNumeric};
        spec.methods = {EssrMethod::MonteCarlo};
        int rc = 0;
        for (int n_fj : {1, 2, 4, 8, 16}) {
            cfg.n_fj = n_fj;
            rc |= run_one_sweep(spec, cfg, pos, path_for("fig4_nfj" + std::to_string(n_fj)));
        }
        return rc;
    }
    std::cerr << "unknown preset: " << name << " (expected fig2|fig3|fig4)\n";
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-way untrusted-relay secrecy-rate simulator"};
    app.require_subcommand(1);

    CommonArgs args;
    auto add_common = [&args](CLI::App* cmd) {
        cmd->add_option("--config", args.config_path, "network configuration file");
        cmd->add_option("--out", args.out_path, "output path");
        cmd->add_option("--trials", args.trials, "Monte Carlo trials per point");
        cmd->add_option("--seed", args.seed, "base RNG seed");
        cmd->add_option("--threads", args.threads,
                        "worker pool size (0: SECRECY_SIM_THREADS or all cores)");
    };

    CLI::App* sweep = app.add_subcommand("sweep", "run a parameter sweep to CSV");
    add_common(sweep);
    sweep->add_option("--strategies", args.strategies,
                      "comma list: opa_closed,opa_lsma,opa_numeric,epa,wofj_opa");
    sweep->add_option("--methods", args.methods,
                      "comma list: monte_carlo,closed_form,asymptotic");
    sweep->add_option("--sweep", args.sweep, "kind:start:stop:step (snr_db|num_fj_antennas|fj_distance)");
    sweep->add_flag("--lsma-sinr", args.lsma, "use the large-scale-antenna SINR forms");

    CLI::App* validate = app.add_subcommand("validate", "run the oracle-equivalence suites");
    add_common(validate);

    CLI::App* preset = app.add_subcommand("preset", "run a canned figure reproduction");
    std::string preset_name;
    preset->add_option("name", preset_name, "fig2|fig3|fig4")->required();
    add_common(preset);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (sweep->parsed()) return cmd_sweep(args);
        if (validate->parsed()) {
            const std::string path =
                args.out_path == "sweep.csv" ? std::string("validation_report.json") : args.out_path;
            const int rc = run_validation_to_file(path, std::max<std::int64_t>(args.trials / 2, 20000));
            std::cout << "wrote " << path << (rc == 0 ? " (all checks passed)" : " (FAILURES)")
                      << "\n";
            return rc;
        }
        if (preset->parsed()) return cmd_preset(preset_name, args);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
