#include "secrecy/essr.hpp"

#include <array>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "coeffs_detail.hpp"
#include "float128.hpp"
#include "secrecy/channel.hpp"
#include "secrecy/quadrature.hpp"
#include "secrecy/sinr.hpp"

namespace secrecy {

const char* to_string(EssrMethod m) {
    switch (m) {
        case EssrMethod::MonteCarlo: return "monte_carlo";
        case EssrMethod::ClosedForm: return "closed_form";
        case EssrMethod::Asymptotic: return "asymptotic";
        case EssrMethod::Quadrature: return "quadrature";
    }
    return "?";
}

const char* to_string(ClampConvention c) {
    return c == ClampConvention::AverageThenClamp ? "average_then_clamp" : "clamp_then_average";
}

int resolve_thread_count(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("SECRECY_SIM_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// ---------------------------------------------------------------------------
// Monte Carlo
// ---------------------------------------------------------------------------

namespace {

struct Neumaier {
    double sum = 0.0;
    double comp = 0.0;
    void add(double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

constexpr int kQuantities = 7;  // rs, rs^2, [rs]^+, ([rs]^+)^2, i1, i2, i3
constexpr std::int64_t kBlockSize = 4096;

using BlockSums = std::array<double, kQuantities>;

BlockSums run_block(const NetworkConfig& cfg_eff, PowerStrategy strategy, std::uint64_t seed,
                    std::int64_t first, std::int64_t count, const MonteCarloOptions& opts) {
    std::array<Neumaier, kQuantities> acc;
    SeededSampler sampler{seed, 0};
    for (std::int64_t k = 0; k < count; ++k) {
        const ChannelRealization ch =
            SeededSampler::sample(cfg_eff, sampler, static_cast<std::uint64_t>(first + k));
        SinrTriple s;
        if (opts.lsma_sinr) {
            s = lsma_sinrs(ch);
        } else {
            const PowerAllocation pa = choose_lambda(strategy, ch, cfg_eff, opts.opa_tol);
            s = sinrs(ch, pa.lambda, cfg_eff.eps_users, cfg_eff.eps_relay);
        }
        const double i1 = std::log1p(s.gamma_bs);
        const double i2 = std::log1p(s.gamma_mu);
        const double i3 = std::log1p(s.gamma_r);
        const double rs = (i1 + i2 - i3) / (2.0 * std::numbers::ln2);
        const double rsp = std::max(0.0, rs);
        acc[0].add(rs);
        acc[1].add(rs * rs);
        acc[2].add(rsp);
        acc[3].add(rsp * rsp);
        acc[4].add(i1);
        acc[5].add(i2);
        acc[6].add(i3);
    }
    BlockSums out;
    for (int i = 0; i < kQuantities; ++i) out[i] = acc[i].value();
    return out;
}

// Fixed pairwise tree over the ordered block sums; independent of which
// worker produced which block, so serial and parallel runs agree bitwise.
BlockSums reduce_tree(std::vector<BlockSums> blocks) {
    if (blocks.empty()) return BlockSums{};
    std::size_t n = blocks.size();
    while (n > 1) {
        const std::size_t half = n / 2;
        for (std::size_t i = 0; i < half; ++i)
            for (int j = 0; j < kQuantities; ++j)
                blocks[i][j] = blocks[2 * i][j] + blocks[2 * i + 1][j];
        if (n % 2 == 1) blocks[half] = blocks[n - 1];
        n = half + n % 2;
    }
    return blocks[0];
}

}  // namespace

MonteCarloDetail essr_montecarlo_detail(const NetworkConfig& cfg, PowerStrategy strategy,
                                        std::int64_t trials, std::uint64_t seed,
                                        const MonteCarloOptions& opts) {
    if (trials < 1) throw std::invalid_argument("essr_montecarlo: trials must be >= 1");
    validate_config(cfg);
    const NetworkConfig cfg_eff = effective_config(strategy, cfg);
    if (!opts.lsma_sinr && cfg_eff.n_fj == 0 && cfg_eff.eps_relay == 0.0)
        throw std::invalid_argument("essr_montecarlo: eps_relay = 0 without a jammer");

    const std::int64_t n_blocks = (trials + kBlockSize - 1) / kBlockSize;
    std::vector<BlockSums> blocks(static_cast<std::size_t>(n_blocks));
    std::atomic<std::int64_t> next{0};
    const int n_threads =
        static_cast<int>(std::min<std::int64_t>(resolve_thread_count(opts.threads), n_blocks));
    auto worker = [&] {
        for (;;) {
            const std::int64_t b = next.fetch_add(1);
            if (b >= n_blocks) return;
            const std::int64_t first = b * kBlockSize;
            const std::int64_t count = std::min(kBlockSize, trials - first);
            blocks[static_cast<std::size_t>(b)] =
                run_block(cfg_eff, strategy, seed, first, count, opts);
        }
    };
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(n_threads));
        for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    const BlockSums total = reduce_tree(std::move(blocks));

    const double n = static_cast<double>(trials);
    auto ci95 = [n](double sum, double sumsq) {
        if (n < 2) return 0.0;
        const double mean = sum / n;
        const double var = std::max(0.0, (sumsq - n * mean * mean) / (n - 1.0));
        return 1.959963984540054 * std::sqrt(var / n);
    };
    MonteCarloDetail d;
    d.trials = trials;
    d.essr_avg_then_clamp = std::max(0.0, total[0] / n);
    d.ci_avg_then_clamp = ci95(total[0], total[1]);
    d.essr_clamp_then_avg = total[2] / n;
    d.ci_clamp_then_avg = ci95(total[2], total[3]);
    d.i1 = total[4] / n;
    d.i2 = total[5] / n;
    d.i3 = total[6] / n;
    return d;
}

EssrEstimate essr_montecarlo(const NetworkConfig& cfg, PowerStrategy strategy,
                             std::int64_t trials, std::uint64_t seed,
                             const MonteCarloOptions& opts) {
    const MonteCarloDetail d = essr_montecarlo_detail(cfg, strategy, trials, seed, opts);
    EssrEstimate e;
    e.method = EssrMethod::MonteCarlo;
    e.trials = trials;
    e.convention = opts.convention;
    if (opts.convention == ClampConvention::AverageThenClamp) {
        e.value = d.essr_avg_then_clamp;
        e.ci_halfwidth = d.ci_avg_then_clamp;
    } else {
        e.value = d.essr_clamp_then_avg;
        e.ci_halfwidth = d.ci_clamp_then_avg;
    }
    return e;
}

// ---------------------------------------------------------------------------
// Closed forms
// ---------------------------------------------------------------------------

double i2_closed(double gamma_mr_bar) {
    if (!(gamma_mr_bar > 0.0)) throw std::invalid_argument("i2_closed: gamma_mr_bar > 0");
    // E{ln(1 + gmr/2)} = e^{2/gmr_bar} E1(2/gmr_bar); the positive exponent is
    // the sign that survives the quadrature cross-check.
    return e1_scaled(2.0 / gamma_mr_bar);
}

double i3_closed() { return std::numbers::ln2; }

namespace {

using detail::f128;

struct RatioDensity {
    f128 log_norm;  // ln of the Gamma-ratio prefactor with r^Nbs
    double r;
    int n_fj;
    int n_bs;

    double log_pdf(double x) const {
        return static_cast<double>(log_norm) + (n_fj - 1) * std::log(x) -
               (n_fj + n_bs) * std::log(x + r);
    }
};

RatioDensity make_density(const NetworkConfig& cfg) {
    if (cfg.n_fj < 1)
        throw std::invalid_argument("closed-form rate terms need a jammer (n_fj >= 1)");
    RatioDensity d;
    d.r = cfg.mu_fr / cfg.mu_br;
    d.n_fj = cfg.n_fj;
    d.n_bs = cfg.n_bs;
    d.log_norm = detail::q_lgamma((f128)(cfg.n_fj + cfg.n_bs)) -
                 detail::q_lgamma((f128)cfg.n_fj) - detail::q_lgamma((f128)cfg.n_bs) +
                 (f128)cfg.n_bs * detail::q_log((f128)d.r);
    return d;
}

// e^x * E1_approx(x) as one sum: every exponent (1 - b_p b_q) x is negative.
f128 ei_approx_scaled_q(f128 x, const EiApproxParams& params) {
    f128 total = 0.0;
    for (size_t p = 0; p < params.b_p.size(); ++p) {
        const f128 wp = (f128)params.w_p[p] * detail::q_sqrt((f128)params.b_p[p]);
        f128 inner = 0.0;
        for (size_t q = 0; q < params.b_q.size(); ++q)
            inner += (f128)params.w_q[q] *
                     detail::q_exp((1.0 - (f128)params.b_p[p] * (f128)params.b_q[q]) * x);
        total += wp * inner;
    }
    return (f128)(4.0 / std::numbers::pi) * total;
}

}  // namespace

double i1_closed(const NetworkConfig& cfg, const EiApproxParams& params, EiBackend backend) {
    validate_config(cfg);
    const RatioDensity dens = make_density(cfg);
    const int n = cfg.n_bs + cfg.n_fj;
    const f128 rho_ = (f128)1.0 + (f128)dens.r;
    const f128 u0 = (f128)1.0 / rho_;
    const f128 w0 = (f128)1.0 - u0;
    const f128 gmr = (f128)cfg.gamma_mr_bar();

    // A_i against (u - 1/varrho)^{-i}; A[i] = taylor coefficient c_{n-i}
    const std::vector<f128> c = detail::taylor_coeffs_q(cfg.n_bs, cfg.n_fj, u0);
    std::vector<f128> a(static_cast<std::size_t>(n) + 1, 0.0);
    for (int i = 1; i <= n; ++i)
        if (n - i < static_cast<int>(c.size())) a[static_cast<std::size_t>(i)] = c[n - i];

    const f128 log_pref = dens.log_norm - (f128)n * detail::q_log(rho_);
    f128 total = 0.0;
    for (size_t p = 0; p < params.b_p.size(); ++p) {
        const f128 bp = (f128)params.b_p[p];
        const f128 wp = (f128)params.w_p[p] * detail::q_sqrt(bp);
        f128 inner_p = 0.0;
        for (size_t q = 0; q < params.b_q.size(); ++q) {
            const f128 beta = bp * (f128)params.b_q[q] - (f128)1.0;
            if (!(beta > 0.0))
                throw std::runtime_error("i1_closed: rate ladder produced a non-positive rate");
            const f128 x = beta * (f128)3.0 * w0 / gmr;
            // scaled recurrence: Et_n = e^{beta(2-3/varrho)/gmr} E_n(x); the
            // driving constant e^{c-x} = e^{-beta/gmr} keeps everything finite
            const f128 edec = detail::q_exp(-beta / gmr);
            f128 et = (backend == EiBackend::Exact)
                          ? edec * detail::q_e1_scaled(x)
                          : edec * ei_approx_scaled_q(x, params);
            f128 wpow = 1.0;
            f128 inner = a[1] * et;
            for (int i = 1; i < n; ++i) {
                et = (edec - x * et) / (f128)i;
                wpow /= w0;
                inner += a[static_cast<std::size_t>(i) + 1] * wpow * et;
            }
            inner_p += (f128)params.w_q[q] * inner;
        }
        total += wp * inner_p;
    }
    const f128 value = (f128)(4.0 / std::numbers::pi) * detail::q_exp(log_pref) * total;
    const double out = static_cast<double>(value);
    if (!std::isfinite(out)) {
        std::ostringstream msg;
        msg << "i1_closed: assembly overflowed (n_bs=" << cfg.n_bs << ", n_fj=" << cfg.n_fj
            << ", varrho=" << static_cast<double>(rho_)
            << "); the log-domain prefactor path cannot represent this configuration";
        throw std::runtime_error(msg.str());
    }
    return out;
}

namespace {

double ratio_mass_scale(const RatioDensity& dens) {
    return dens.n_bs > 1 ? dens.n_fj * dens.r / (dens.n_bs - 1) : dens.n_fj * dens.r;
}

}  // namespace

double i1_quadrature(const NetworkConfig& cfg, double abs_tol) {
    validate_config(cfg);
    const RatioDensity dens = make_density(cfg);
    const double gmr = cfg.gamma_mr_bar();
    auto f = [&](double z) {
        if (z <= 0.0 || z >= 1.0) return 0.0;
        const double s = (1.0 + 2.0 * z) / ((1.0 - z) * gmr);
        return std::exp(dens.log_pdf(z)) * e1_scaled(s);
    };
    const double m = ratio_mass_scale(dens);
    double knots_raw[] = {0.0, m / 8.0, m, std::min(8.0 * m, 0.5), 0.9, 0.99, 1.0};
    std::vector<double> knots;
    for (double k : knots_raw)
        if (knots.empty() || k > knots.back()) knots.push_back(std::min(k, 1.0));
    if (knots.back() < 1.0) knots.push_back(1.0);
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < knots.size(); ++i)
        sum += integrate(f, knots[i], knots[i + 1], abs_tol / static_cast<double>(knots.size()))
                   .value;
    return sum;
}

double gamma_bs_cdf(double gamma, const NetworkConfig& cfg) {
    validate_config(cfg);
    if (gamma < 0.0) return 0.0;
    const RatioDensity dens = make_density(cfg);
    const double gmr = cfg.gamma_mr_bar();
    auto f = [&](double z) {
        if (z <= 0.0 || z >= 1.0) return 0.0;
        const double expo = -gamma * (1.0 + 2.0 * z) / (gmr * (1.0 - z));
        return std::exp(dens.log_pdf(z) + expo);
    };
    const double m = ratio_mass_scale(dens);
    double sum = 0.0;
    const double knots[] = {0.0, m / 8.0, m, std::min(8.0 * m, 0.5), 0.9, 1.0};
    double prev = 0.0;
    for (double k : knots) {
        if (k > prev && k <= 1.0) {
            sum += integrate(f, prev, k, 1e-10).value;
            prev = k;
        }
    }
    if (prev < 1.0) sum += integrate(f, prev, 1.0, 1e-10).value;
    return 1.0 - sum;
}

EssrEstimate essr_closed(const NetworkConfig& cfg, const EiApproxParams& params) {
    validate_config(cfg);
    // jammer-free limit: the gain ratio collapses to zero and
    // E{ln(1+gamma_BS)} -> E{ln(1+gamma_mr)}
    const double i1 =
        cfg.n_fj > 0 ? i1_closed(cfg, params) : e1_scaled(1.0 / cfg.gamma_mr_bar());
    const double i2 = i2_closed(cfg.gamma_mr_bar());
    const double i3 = i3_closed();
    EssrEstimate e;
    e.method = EssrMethod::ClosedForm;
    e.value = std::max(0.0, (i1 + i2 - i3) / (2.0 * std::numbers::ln2));
    return e;
}

}  // namespace secrecy
