#include "secrecy/sinr.hpp"

#include <cmath>
#include <stdexcept>

namespace secrecy {

double relay_gain(const ChannelRealization& ch, double lambda, double rho) {
    if (!(lambda > 0.0 && lambda < 1.0)) throw std::invalid_argument("relay_gain: lambda in (0,1)");
    const double den = lambda * ch.gamma_br + (1.0 - lambda) * ch.gamma_mr + ch.gamma_fr + 1.0;
    return std::sqrt(rho / den);
}

SinrTriple sinrs(const ChannelRealization& ch, double lambda, double eps_users,
                 double eps_relay) {
    if (!(lambda > 0.0 && lambda < 1.0)) throw std::invalid_argument("sinrs: lambda in (0,1)");
    const double relay_den = ch.gamma_fr + eps_relay;
    if (!(relay_den > 0.0))
        throw std::domain_error("sinrs: relay SINR singular (no jamming and eps_relay = 0)");
    SinrTriple s;
    s.gamma_bs = (1.0 - lambda) * ch.gamma_br * ch.gamma_mr /
                 ((1.0 + lambda) * ch.gamma_br + (1.0 - lambda) * ch.gamma_mr + ch.gamma_fr +
                  eps_users);
    s.gamma_mu = lambda * ch.gamma_br * ch.gamma_mr /
                 (lambda * ch.gamma_br + (2.0 - lambda) * ch.gamma_mr + ch.gamma_fr + eps_users);
    s.gamma_r = (lambda * ch.gamma_br + (1.0 - lambda) * ch.gamma_mr) / relay_den;
    return s;
}

SinrTriple lsma_sinrs(const ChannelRealization& ch) {
    if (!(ch.gamma_br > 0.0)) throw std::domain_error("lsma_sinrs: gamma_br must be positive");
    const double ratio = ch.gamma_fr / ch.gamma_br;
    SinrTriple s;
    // the ratio exceeds 1 only far outside the large-antenna regime; the
    // closed forms put zero mass there, so clamp instead of going negative
    s.gamma_bs = ratio < 1.0 ? ch.gamma_mr * (1.0 - ratio) / (1.0 + 2.0 * ratio) : 0.0;
    s.gamma_mu = 0.5 * ch.gamma_mr;
    s.gamma_r = 1.0;
    return s;
}

SecrecyObjective objective_from_sinrs(const SinrTriple& s) {
    SecrecyObjective o;
    o.phi = (1.0 + s.gamma_bs) * (1.0 + s.gamma_mu) / (1.0 + s.gamma_r);
    o.rs_unclamped = 0.5 * std::log2(o.phi);
    o.rs = std::max(0.0, o.rs_unclamped);
    return o;
}

SecrecyObjective phi(const ChannelRealization& ch, double lambda, const NetworkConfig& cfg) {
    return objective_from_sinrs(sinrs(ch, lambda, cfg.eps_users, cfg.eps_relay));
}

}  // namespace secrecy
