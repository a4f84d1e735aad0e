#include "secrecy/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace secrecy {

const char* to_string(SweepKind k) {
    switch (k) {
        case SweepKind::SnrDb: return "snr_db";
        case SweepKind::NumFjAntennas: return "num_fj_antennas";
        case SweepKind::FjDistance: return "fj_distance";
    }
    return "?";
}

SweepKind sweep_kind_from_string(const std::string& name) {
    if (name == "snr_db") return SweepKind::SnrDb;
    if (name == "num_fj_antennas") return SweepKind::NumFjAntennas;
    if (name == "fj_distance") return SweepKind::FjDistance;
    throw std::invalid_argument("unknown sweep kind: " + name);
}

EssrMethod essr_method_from_string(const std::string& name) {
    if (name == "monte_carlo") return EssrMethod::MonteCarlo;
    if (name == "closed_form") return EssrMethod::ClosedForm;
    if (name == "asymptotic") return EssrMethod::Asymptotic;
    throw std::invalid_argument("unknown method: " + name);
}

void validate_spec(const SweepSpec& spec, const NetworkConfig& cfg) {
    if (spec.values.empty()) throw std::invalid_argument("sweep: values must be non-empty");
    if (!std::is_sorted(spec.values.begin(), spec.values.end()) ||
        std::adjacent_find(spec.values.begin(), spec.values.end()) != spec.values.end())
        throw std::invalid_argument("sweep: values must be strictly increasing");
    if (spec.strategies.empty()) throw std::invalid_argument("sweep: no strategies given");
    if (spec.methods.empty()) throw std::invalid_argument("sweep: no methods given");
    if (spec.trials < 1) throw std::invalid_argument("sweep: trials must be positive");
    const bool closed = std::find(spec.methods.begin(), spec.methods.end(),
                                  EssrMethod::ClosedForm) != spec.methods.end() ||
                        std::find(spec.methods.begin(), spec.methods.end(),
                                  EssrMethod::Asymptotic) != spec.methods.end();
    if (closed && cfg.n_fj < 1 && spec.kind != SweepKind::NumFjAntennas)
        throw std::invalid_argument(
            "sweep: closed-form/asymptotic methods need a jammer (n_fj >= 1)");
    if (spec.kind == SweepKind::NumFjAntennas)
        for (double v : spec.values)
            if (v < 0.0 || v != std::floor(v))
                throw std::invalid_argument("sweep: antenna counts must be non-negative integers");
    if (spec.kind == SweepKind::FjDistance)
        for (double v : spec.values)
            if (!(v > 0.0)) throw std::invalid_argument("sweep: distances must be positive");
}

NetworkConfig apply_sweep_value(const SweepSpec& spec, const NetworkConfig& base,
                                const NodePositions& pos, double value) {
    NetworkConfig c = base;
    switch (spec.kind) {
        case SweepKind::SnrDb:
            c.rho = std::pow(10.0, value / 10.0);
            break;
        case SweepKind::NumFjAntennas:
            c.n_fj = static_cast<int>(value);
            break;
        case SweepKind::FjDistance: {
            // move the jammer to distance `value` along its configured bearing
            NodePositions p = pos;
            const double dx = p.fj.x - p.relay.x;
            const double dy = p.fj.y - p.relay.y;
            const double d0 = std::hypot(dx, dy);
            if (d0 <= 0.0) throw std::invalid_argument("sweep: jammer sits on the relay");
            p.fj.x = p.relay.x + dx / d0 * value;
            p.fj.y = p.relay.y + dy / d0 * value;
            c.mu_fr = gains_from_geometry(p, c.alpha).mu_fr;
            break;
        }
    }
    return c;
}

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace

SweepSummary run_sweep(const SweepSpec& spec, const NetworkConfig& cfg,
                       const NodePositions& pos, std::ostream& out) {
    validate_spec(spec, cfg);
    validate_config(cfg);
    SweepSummary summary;
    const EiApproxParams params = make_ei_approx_params(spec.ei_t, spec.ei_t);

    out << "# secrecy_sim sweep\n";
    out << "# sweep_kind: " << to_string(spec.kind) << "\n";
    out << "# essr_convention: " << to_string(spec.convention) << "\n";
    out << "# lsma_sinr: " << (spec.lsma_sinr ? 1 : 0) << "\n";
    out << "# n_bs: " << cfg.n_bs << "\n# n_fj: " << cfg.n_fj << "\n";
    out << "# mu: " << fmt(cfg.mu_br) << " " << fmt(cfg.mu_mr) << " " << fmt(cfg.mu_fr) << "\n";
    out << "# eps_users: " << fmt(cfg.eps_users) << "\n# eps_relay: " << fmt(cfg.eps_relay)
        << " (wofj rows use eps_relay=1)\n";
    out << "sweep_kind,sweep_value,strategy,method,essr_bits,ci_halfwidth,trials,seed,"
           "regime_flags\n";

    for (double value : spec.values) {
        const NetworkConfig point_cfg = apply_sweep_value(spec, cfg, pos, value);
        const std::string flags = regime_check(point_cfg).flags();
        for (PowerStrategy strategy : spec.strategies) {
            for (EssrMethod method : spec.methods) {
                EssrEstimate est;
                switch (method) {
                    case EssrMethod::MonteCarlo: {
                        MonteCarloOptions mco;
                        mco.lsma_sinr = spec.lsma_sinr;
                        mco.convention = spec.convention;
                        mco.threads = spec.threads;
                        est = essr_montecarlo(point_cfg, strategy, spec.trials, spec.seed, mco);
                        break;
                    }
                    case EssrMethod::ClosedForm:
                        est = essr_closed(point_cfg, params);
                        break;
                    case EssrMethod::Asymptotic:
                        est = essr_asymptotic(point_cfg);
                        break;
                    case EssrMethod::Quadrature:
                        throw std::invalid_argument("sweep: quadrature is not a sweep method");
                }
                SweepRow row{spec.kind, value, strategy, method, est, flags};
                summary.rows.push_back(row);
                out << to_string(spec.kind) << ',' << fmt(value) << ',' << to_string(strategy)
                    << ',' << to_string(method) << ',' << fmt(est.value) << ','
                    << fmt(est.ci_halfwidth) << ',' << est.trials << ',' << spec.seed << ','
                    << flags << '\n';
            }
        }
    }
    return summary;
}

SweepSummary run_sweep_to_file(const SweepSpec& spec, const NetworkConfig& cfg,
                               const NodePositions& pos, const std::string& out_path) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    SweepSummary s = run_sweep(spec, cfg, pos, out);
    s.csv_path = out_path;
    return s;
}

}  // namespace secrecy
