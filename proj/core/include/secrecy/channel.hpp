#pragma once

#include <cstdint>

#include "secrecy/model.hpp"

namespace secrecy {

/// One drawn Rayleigh-fading state, expressed as the normalized instantaneous
/// gains gamma = rho * |h|^2 (squared channel norms times transmit SNR).
struct ChannelRealization {
    double gamma_br = 0.0;
    double gamma_mr = 0.0;
    double gamma_fr = 0.0;
};

/// Counter-based sampler: the realization for (seed, trial) is a pure
/// function of both, so serial and parallel runs over disjoint trial ranges
/// produce identical streams.
struct SeededSampler {
    std::uint64_t seed = 0;
    std::uint64_t counter = 0;

    ChannelRealization next(const NetworkConfig& cfg) { return sample(cfg, *this, counter++); }

    static ChannelRealization sample(const NetworkConfig& cfg, const SeededSampler& s,
                                     std::uint64_t trial);
};

inline ChannelRealization sample(const NetworkConfig& cfg, const SeededSampler& s,
                                 std::uint64_t trial) {
    return SeededSampler::sample(cfg, s, trial);
}

/// Density of the gain ratio gamma_fr/gamma_br at x >= 0:
///
///   f(x) = G(Nfj+Nbs)/(G(Nfj) G(Nbs)) * r^Nbs * x^(Nfj-1) / (x+r)^(Nfj+Nbs)
///
/// with r = gamma_fr_bar/gamma_br_bar = mu_fr/mu_br (per-branch means; rho
/// cancels).  Evaluated in log space so large antenna counts do not overflow.
/// Throws std::invalid_argument when n_fj = 0 (ratio undefined without jammer).
double gamma_ratio_pdf(double x, const NetworkConfig& cfg);

}  // namespace secrecy
