#pragma once

#include "secrecy/essr.hpp"

namespace secrecy {

inline constexpr double kEulerGamma = 0.57721566490153286;

/// E{ln gamma_mr} = ln(gamma_mr_bar) - EulerGamma.
double i11(double gamma_mr_bar);

/// E{ln(1 - gamma_fb)} over the gain ratio restricted to (0,1); exact finite
/// form, always negative.  Overload on (n_bs, n_fj, varrho) for direct grids.
double i12(const NetworkConfig& cfg);
double i12(int n_bs, int n_fj, double varrho);

/// E{ln(1 + 2 gamma_fb)} over the full ratio range; exact finite form,
/// always positive.
double i13(const NetworkConfig& cfg);
double i13(int n_bs, int n_fj, double varrho);

/// High-SNR ESSR: (2*I11 + I12 - I13 - 2 ln 2) / (2 ln 2).
EssrEstimate essr_asymptotic(const NetworkConfig& cfg);

/// Affine high-SNR description essr(rho) = slope * (log2(rho) - offset).
struct AsymptoticResult {
    double slope = 1.0;   // bits/s/Hz per 3 dB
    double offset = 0.0;  // 3 dB units

    double essr_at(double rho) const { return slope * (std::log2(rho) - offset); }
};

/// slope = 1;  offset = -log2(mu_mr) - I12/(2 ln2) + I13/(2 ln2)
///             + EulerGamma/ln2 + 1.
AsymptoticResult slope_offset(const NetworkConfig& cfg);

/// First-order offset law for gamma_br_bar >> gamma_fr_bar:
///   -log2(mu_mr) + 3 Nfj mu_fr / ((Nbs-1) mu_br ln2) + EulerGamma/ln2 + 1.
/// Throws std::invalid_argument for n_bs < 2.
double power_offset_simplified(const NetworkConfig& cfg);

}  // namespace secrecy
