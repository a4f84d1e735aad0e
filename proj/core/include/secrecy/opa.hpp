#pragma once

#include <string>

#include "secrecy/sinr.hpp"

namespace secrecy {

enum class PowerStrategy {
    OpaClosed,   // closed-form optimum, valid for gamma_br >> gamma_mr
    OpaLsma,     // lambda* = gamma_fr/gamma_br
    OpaNumeric,  // derivative-sign bisection on ln Phi
    Epa,         // lambda = 1/2
    WoFjOpa,     // numeric optimum with the jammer off and eps_relay = 1
};

const char* to_string(PowerStrategy s);
PowerStrategy power_strategy_from_string(const std::string& name);

struct PowerAllocation {
    double lambda = 0.5;
    PowerStrategy strategy = PowerStrategy::Epa;
    bool clipped = false;  // closed form fell outside (0,1) and was clamped
};

/// Power splits live in [kLambdaMin, 1-kLambdaMin]; the open interval (0,1)
/// attains no boundary optimum and the clamp keeps every formula finite.
inline constexpr double kLambdaMin = 1e-6;

/// Closed-form maximizer of the instantaneous secrecy objective,
///
///   lambda* = (-2 g_mr - g_fr + g_mr sqrt(2 g_mr^2 + 3 g_mr g_fr - 2 g_mr
///              + g_fr^2 - g_fr)) / (g_br g_mr),
///
/// derived under gamma_br >> gamma_mr.  Throws std::domain_error when the
/// radicand is negative (outside the validity regime; fall back to
/// opa_numeric).
PowerAllocation opa_closed(const ChannelRealization& ch);

/// High-SNR split lambda* = gamma_fr/gamma_br, clamped; `clipped` is set when
/// gamma_fr >= gamma_br (lambda < 1 requires more BS antennas than FJ).
PowerAllocation opa_lsma(const ChannelRealization& ch);

/// Maximizes Phi(lambda) to within `tol` by bisecting on the sign of a
/// central-difference derivative of ln Phi; falls back to golden-section
/// search if the probed derivative signs are not single-crossing.
PowerAllocation opa_numeric(const ChannelRealization& ch, const NetworkConfig& cfg,
                            double tol = 1e-9);

/// Brute-force argmax of Phi over `steps` uniform lambda points in (0,1);
/// ties break toward smaller lambda.  Validation oracle for the two above.
PowerAllocation opa_grid_oracle(const ChannelRealization& ch, const NetworkConfig& cfg,
                                int steps);

/// Strategy dispatch used by the Monte Carlo estimator.  OpaClosed falls back
/// to opa_numeric outside its validity regime.  WoFjOpa zeroes the jammer and
/// switches the relay epsilon to 1; `effective_*` below expose the same
/// transformation for SINR evaluation.
PowerAllocation choose_lambda(PowerStrategy strategy, const ChannelRealization& ch,
                              const NetworkConfig& cfg, double tol = 1e-9);

NetworkConfig effective_config(PowerStrategy strategy, const NetworkConfig& cfg);
ChannelRealization effective_realization(PowerStrategy strategy, const ChannelRealization& ch);

}  // namespace secrecy
