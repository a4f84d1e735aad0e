#pragma once

#include "secrecy/channel.hpp"
#include "secrecy/model.hpp"

namespace secrecy {

struct SinrTriple {
    double gamma_bs = 0.0;
    double gamma_mu = 0.0;
    double gamma_r = 0.0;
};

struct SecrecyObjective {
    double phi = 1.0;  // (1+gamma_BS)(1+gamma_MU)/(1+gamma_R)
    double rs = 0.0;   // [0.5*log2(phi)]^+  bits/s/Hz
    double rs_unclamped = 0.0;
};

/// Amplify-and-forward gain G of the relay.  In normalized gains,
/// G^2 = rho / (lambda*gamma_br + (1-lambda)*gamma_mr + gamma_fr + 1); the
/// trailing 1 is the relay noise, so the denominator never vanishes.
double relay_gain(const ChannelRealization& ch, double lambda, double rho);

/// Exact two-way AF SINRs for power split lambda in (0,1):
///
///   gamma_BS = (1-l) g_br g_mr / ((1+l) g_br + (1-l) g_mr + g_fr + eps_u)
///   gamma_MU =   l   g_br g_mr / (  l   g_br + (2-l) g_mr + g_fr + eps_u)
///   gamma_R  = (l g_br + (1-l) g_mr) / (g_fr + eps_r)
///
/// Throws std::domain_error when eps_r = 0 and gamma_fr = 0 (the relay SINR
/// is singular; jammer-free operation must use eps_relay = 1).
SinrTriple sinrs(const ChannelRealization& ch, double lambda, double eps_users,
                 double eps_relay);

/// Large-scale-antenna SINRs with the ratio-optimal power split substituted:
/// gamma_BS = g_mr (1-R)/(1+2R) with R = g_fr/g_br (clamped at zero when
/// R > 1), gamma_MU = g_mr/2, gamma_R = 1.
SinrTriple lsma_sinrs(const ChannelRealization& ch);

/// Instantaneous secrecy sum-rate objective at a given power split.
SecrecyObjective phi(const ChannelRealization& ch, double lambda, const NetworkConfig& cfg);

SecrecyObjective objective_from_sinrs(const SinrTriple& s);

}  // namespace secrecy
