#include "secrecy/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "secrecy/special.hpp"

namespace secrecy {

namespace {

/* Counter-based stream: every trial derives its own generator state from
 * (seed, trial) through splitmix64, so realization k is the same no matter
 * which worker draws it or in what order.
 */
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// uniform in (0, 1]
inline double next_uniform(std::uint64_t& state) {
    return (static_cast<double>(splitmix64(state) >> 11) + 1.0) * 0x1p-53;
}

/* Sum of n squared complex-Gaussian magnitudes with unit per-branch mean.
 * Each Box-Muller pair (x,y) has x^2+y^2 = -2 ln U exactly, so the sum is
 * drawn as -sum ln U_k: a Gamma(n, 1) variate with no rejection step.
 */
inline double gamma_sum(std::uint64_t& state, int n) {
    double acc = 0.0;
    for (int k = 0; k < n; ++k) acc -= std::log(next_uniform(state));
    return acc;
}

}  // namespace

ChannelRealization SeededSampler::sample(const NetworkConfig& cfg, const SeededSampler& s,
                                         std::uint64_t trial) {
    std::uint64_t state = s.seed ^ (trial * 0xD1B54A32D192ED03ull + 0x9E3779B97F4A7C15ull);
    // one warm-up output decorrelates nearby (seed, trial) pairs
    (void)splitmix64(state);
    ChannelRealization ch;
    ch.gamma_br = cfg.rho * cfg.mu_br * gamma_sum(state, cfg.n_bs);
    ch.gamma_mr = cfg.rho * cfg.mu_mr * gamma_sum(state, 1);
    ch.gamma_fr = cfg.n_fj > 0 ? cfg.rho * cfg.mu_fr * gamma_sum(state, cfg.n_fj) : 0.0;
    return ch;
}

double gamma_ratio_pdf(double x, const NetworkConfig& cfg) {
    if (cfg.n_fj < 1) throw std::invalid_argument("gamma_ratio_pdf: ratio undefined without jammer");
    if (x < 0.0) return 0.0;
    const double r = cfg.mu_fr / cfg.mu_br;
    const double lg = log_gamma_ratio_prefactor(cfg.n_fj, cfg.n_bs, r);
    if (x == 0.0) {
        if (cfg.n_fj == 1) return std::exp(lg - (cfg.n_fj + cfg.n_bs) * std::log(r));
        return 0.0;
    }
    return std::exp(lg + (cfg.n_fj - 1) * std::log(x) -
                    (cfg.n_fj + cfg.n_bs) * std::log(x + r));
}

}  // namespace secrecy
