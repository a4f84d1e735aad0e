#include "secrecy/validate.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include <json.hpp>

#include "secrecy/asymptotic.hpp"
#include "secrecy/channel.hpp"
#include "secrecy/essr.hpp"
#include "secrecy/opa.hpp"
#include "secrecy/quadrature.hpp"
#include "secrecy/special.hpp"
#include "secrecy/sweep.hpp"

namespace secrecy {

using nlohmann::json;

bool ValidationReport::all_passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

std::string ValidationReport::to_json() const {
    json j;
    j["all_passed"] = all_passed();
    j["checks"] = json::array();
    for (const auto& c : checks) {
        json jc;
        jc["name"] = c.name;
        jc["passed"] = c.passed;
        jc["details"] = json::parse(c.details.empty() ? "{}" : c.details);
        j["checks"].push_back(jc);
    }
    return j.dump(2);
}

namespace {

// quadrature oracle for E{ln(1 - x)} over the gain ratio restricted to (0,1)
double i12_oracle(int n_bs, int n_fj, double varrho) {
    NetworkConfig cfg;
    cfg.n_bs = n_bs;
    cfg.n_fj = n_fj;
    cfg.mu_br = 1.0;
    cfg.mu_fr = varrho - 1.0;
    auto f = [&](double x) {
        if (x <= 0.0 || x >= 1.0) return 0.0;
        return std::log1p(-x) * gamma_ratio_pdf(x, cfg);
    };
    const double r = varrho - 1.0;
    const double m = n_bs > 1 ? n_fj * r / (n_bs - 1.0) : n_fj * r;
    double knots[] = {0.0, m / 8.0, m, std::min(std::max(8.0 * m, 0.25), 0.5), 0.9, 0.99, 0.9999, 1.0};
    double sum = 0.0, prev = 0.0;
    for (double k : knots) {
        if (k > prev && k <= 1.0) {
            sum += integrate(f, prev, k, 5e-8).value;
            prev = k;
        }
    }
    return sum;
}

// quadrature oracle for E{ln(1 + 2x)} over the full ratio range
double i13_oracle(int n_bs, int n_fj, double varrho) {
    NetworkConfig cfg;
    cfg.n_bs = n_bs;
    cfg.n_fj = n_fj;
    cfg.mu_br = 1.0;
    cfg.mu_fr = varrho - 1.0;
    auto f = [&](double x) {
        if (x <= 0.0) return 0.0;
        return std::log1p(2.0 * x) * gamma_ratio_pdf(x, cfg);
    };
    const double r = varrho - 1.0;
    const double m = n_bs > 1 ? n_fj * r / (n_bs - 1.0) : n_fj * r;
    double sum = 0.0, prev = 0.0;
    for (double k : {m / 8.0, m, 8.0 * m, 64.0 * m}) {
        if (k > prev) {
            sum += integrate(f, prev, k, 5e-8).value;
            prev = k;
        }
    }
    sum += integrate_to_inf(f, prev, 5e-8).value;
    return sum;
}

std::string fmt_json(const json& j) { return j.dump(); }

}  // namespace

ValidationReport run_validation(std::int64_t mc_trials) {
    ValidationReport report;

    {  // dilogarithm identities
        json d;
        const double basel = std::abs(dilog(1.0) - std::numbers::pi * std::numbers::pi / 6.0);
        const double half = std::abs(dilog(0.5) - (std::numbers::pi * std::numbers::pi / 12.0 -
                                                   0.5 * std::numbers::ln2 * std::numbers::ln2));
        double landen = 0.0;
        for (int i = 1; i <= 20; ++i) {
            const double x = i / 21.0;
            const double lhs = dilog(x) + dilog(x / (x - 1.0));
            const double rhs = -0.5 * std::log1p(-x) * std::log1p(-x);
            landen = std::max(landen, std::abs(lhs - rhs));
        }
        d["basel_err"] = basel;
        d["li2_half_err"] = half;
        d["landen_max_err"] = landen;
        report.checks.push_back({"dilog_identities",
                                 basel < 1e-10 && half < 1e-10 && landen < 1e-10, fmt_json(d)});
    }

    {  // exponential integral against direct quadrature of the defining integral
        json d;
        bool ok = true;
        for (double x : {0.1, 1.0, 10.0}) {
            const double oracle =
                -integrate_to_inf([](double s) { return std::exp(-s) / s; }, x, 1e-13).value;
            const double rel = std::abs((ei(-x) - oracle) / oracle);
            d["rel_err_x" + std::to_string(x)] = rel;
            ok = ok && rel < 1e-10;
        }
        report.checks.push_back({"ei_vs_quadrature", ok, fmt_json(d)});
    }

    {  // exponential-sum approximation error measurement
        json d;
        auto max_err = [](int t) {
            const EiApproxParams p = make_ei_approx_params(t, t);
            double worst = 0.0;
            for (int i = 0; i < 200; ++i) {
                const double x = 0.01 * std::pow(1000.0, i / 199.0);
                worst = std::max(worst, std::abs((ei_approx(x, p) - ei(-x)) / ei(-x)));
            }
            return worst;
        };
        const double e10 = max_err(10), e20 = max_err(20), e40 = max_err(40);
        d["max_rel_err_t10"] = e10;
        d["max_rel_err_t20"] = e20;
        d["max_rel_err_t40"] = e40;
        d["window"] = "[0.01, 10]";
        report.checks.push_back(
            {"ei_approx_error", e20 <= 0.05 && e40 <= e10, fmt_json(d)});
    }

    {  // exponent-sign resolution for the MU-rate closed form
        json d;
        bool ok = true;
        for (double g : {0.5, 2.0, 20.0}) {
            const double oracle =
                integrate_to_inf([g](double x) { return std::log1p(g * x / 2.0) * std::exp(-x); },
                                 0.0, 1e-10)
                    .value;
            const double plus = i2_closed(g);
            const double minus = std::exp(-2.0 / g) * e1(2.0 / g);
            d["gmr_" + std::to_string(g)] = {{"oracle", oracle},
                                             {"positive_exponent", plus},
                                             {"negative_exponent", minus}};
            ok = ok && std::abs(plus - oracle) < 1e-6 && std::abs(plus - oracle) < std::abs(minus - oracle);
        }
        d["adopted_sign"] = "positive exponent: exp(+2/gmr_bar) E1(2/gmr_bar)";
        report.checks.push_back({"i2_exponent_sign", ok, fmt_json(d)});
    }

    {  // ratio-expectation closed forms over the full parameter grid
        json d;
        double worst12 = 0.0, worst13 = 0.0;
        for (int n_bs : {2, 8, 64})
            for (int n_fj : {1, 2, 4, 16})
                for (double varrho : {1.01, 1.0625, 1.5, 3.0}) {
                    worst12 = std::max(worst12,
                                       std::abs(i12(n_bs, n_fj, varrho) - i12_oracle(n_bs, n_fj, varrho)));
                    worst13 = std::max(worst13,
                                       std::abs(i13(n_bs, n_fj, varrho) - i13_oracle(n_bs, n_fj, varrho)));
                }
        d["i12_worst_abs_err"] = worst12;
        d["i13_worst_abs_err"] = worst13;
        report.checks.push_back(
            {"i12_i13_quadrature_grid", worst12 < 1e-6 && worst13 < 1e-6, fmt_json(d)});
    }

    {  // power-allocation oracle equivalence on in-regime draws
        json d;
        NetworkConfig cfg;
        cfg.n_bs = 64;
        cfg.n_fj = 1;
        std::mt19937_64 rng(12345);
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        int closed_ok = 0, numeric_ok = 0;
        const int n = 1000;
        for (int i = 0; i < n; ++i) {
            ChannelRealization ch;
            ch.gamma_mr = 10.0 + 90.0 * unif(rng);
            ch.gamma_br = ch.gamma_mr * (50.0 + 450.0 * unif(rng));
            ch.gamma_fr = ch.gamma_br * 0.3 * unif(rng);
            const PowerAllocation grid = opa_grid_oracle(ch, cfg, 10000);
            const double phi_grid = phi(ch, grid.lambda, cfg).phi;
            try {
                const PowerAllocation closed = opa_closed(ch);
                if (phi(ch, closed.lambda, cfg).phi >= 0.99 * phi_grid) ++closed_ok;
            } catch (const std::domain_error&) {
            }
            const PowerAllocation num = opa_numeric(ch, cfg, 1e-9);
            if (std::abs(num.lambda - grid.lambda) <= 1.0 / 10001.0) ++numeric_ok;
        }
        d["closed_within_1pct_of_grid"] = closed_ok;
        d["numeric_within_grid_spacing"] = numeric_ok;
        d["draws"] = n;
        report.checks.push_back(
            {"opa_oracle_equivalence", closed_ok >= 990 && numeric_ok == n, fmt_json(d)});
    }

    {  // closed form against the Monte Carlo estimator
        json d;
        NetworkConfig cfg;
        cfg.n_bs = 256;
        cfg.n_fj = 4;
        cfg.mu_fr = 4.0;
        cfg.rho = 1000.0;
        const EiApproxParams p20 = make_ei_approx_params(20, 20);
        const EiApproxParams p40 = make_ei_approx_params(40, 40);
        MonteCarloOptions mco;
        mco.lsma_sinr = true;
        const EssrEstimate mc = essr_montecarlo(cfg, PowerStrategy::OpaLsma, mc_trials, 99, mco);
        const EssrEstimate cf = essr_closed(cfg, p20);
        const double rel = std::abs(cf.value - mc.value) / mc.value;
        d["mc"] = mc.value;
        d["closed_t20"] = cf.value;
        d["rel_diff"] = rel;
        d["i1_closed_t20_vs_quadrature"] =
            std::abs(i1_closed(cfg, p20) - i1_quadrature(cfg)) / i1_quadrature(cfg);
        d["i1_closed_t40_vs_quadrature"] =
            std::abs(i1_closed(cfg, p40) - i1_quadrature(cfg)) / i1_quadrature(cfg);
        report.checks.push_back({"closed_form_vs_monte_carlo", rel < 0.02, fmt_json(d)});
    }

    {  // sweep determinism across pool sizes
        json d;
        NetworkConfig cfg;
        cfg.n_bs = 16;
        cfg.n_fj = 1;
        cfg.mu_fr = 4.0;
        SweepSpec spec;
        spec.kind = SweepKind::SnrDb;
        spec.values = {10.0, 20.0};
        spec.strategies = {PowerStrategy::OpaNumeric, PowerStrategy::Epa};
        spec.methods = {EssrMethod::MonteCarlo};
        spec.trials = 20000;
        spec.seed = 7;
        std::ostringstream serial, parallel;
        spec.threads = 1;
        run_sweep(spec, cfg, NodePositions{}, serial);
        spec.threads = 8;
        run_sweep(spec, cfg, NodePositions{}, parallel);
        const bool same = serial.str() == parallel.str();
        d["byte_identical"] = same;
        report.checks.push_back({"sweep_determinism", same, fmt_json(d)});
    }

    return report;
}

int run_validation_to_file(const std::string& out_path, std::int64_t mc_trials) {
    const ValidationReport report = run_validation(mc_trials);
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open report file: " + out_path);
    out << report.to_json() << "\n";
    return report.all_passed() ? 0 : 1;
}

}  // namespace secrecy
