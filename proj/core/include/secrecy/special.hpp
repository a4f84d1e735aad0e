#pragma once

#include <vector>

#include "secrecy/model.hpp"

namespace secrecy {

/// Exponential integral Ei(x) for x < 0, to >= 12 significant digits
/// (convergent series for small |x|, continued fraction for large |x|).
/// Throws std::domain_error for x >= 0.
double ei(double x);

/// E1(x) = -Ei(-x) for x > 0.
double e1(double x);

/// exp(x) * E1(x), computed without overflow for any x > 0.
double e1_scaled(double x);

/// Exponential-sum representation of Ei(-x): angular grids whose cot-secant
/// slopes b_p form the rate ladder
///
///   Ei(-x) ~= -(4/pi) sum_p sum_q  w_p w_q sqrt(b_p) exp(-b_p b_q x),
///
/// the tensor discretization of the exact identity
///   Ei(-x) = -(4/pi) II csc(theta) exp(-x csc^2(theta) csc^2(phi)) dtheta dphi
/// over (0, pi/2]^2.  Grid points stay above 0.065; the anchor theta_0 below
/// the first point controls the largest rate (the small-x reach).
struct EiApproxParams {
    int t = 20;        // T:  p-grid has T+1 cells
    int t_prime = 20;  // T': q-grid has T'+1 cells
    double theta0_p = 0.0;
    double theta0_q = 0.0;
    std::vector<double> theta_p;  // strictly increasing in (0.065, pi/2]
    std::vector<double> theta_q;
    std::vector<double> b_p;  // b_p = (cot th_{p-1} - cot th_p)/(th_p - th_{p-1})
    std::vector<double> b_q;
    std::vector<double> w_p;  // cell widths th_p - th_{p-1}
    std::vector<double> w_q;
};

/// Builds the tuned grid family for given T, T'.  The p- and q-grids share
/// one shape profile (denser where the rate ladder needs resolution) and are
/// relatively staggered so the product rates interleave.
EiApproxParams make_ei_approx_params(int t = 20, int t_prime = 20);

/// Evaluates the exponential-sum approximation at x > 0; always negative.
double ei_approx(double x, const EiApproxParams& params);

/// Real dilogarithm Li2(x) for any real x; for x > 1 returns the real part of
/// the analytic continuation, Re Li2(x) = pi^2/3 - ln^2(x)/2 - Li2(1/x).
double dilog(double x);

enum class CoeffKind { A, B, C, D };

/// Partial-fraction / expansion coefficient arrays used by the closed-form
/// rate expressions.  `values[i-1]` holds the coefficient with paper-order
/// index i (i = 1..n_bs+n_fj for kinds A, B, D; i = 1..order-1 for kind C).
struct PartialFractionCoeffs {
    CoeffKind kind = CoeffKind::A;
    std::vector<double> values;
    int n_bs = 0;
    int n_fj = 0;
    double varrho = 0.0;
    int order = 0;  // kind C only: the pole order i the array belongs to
};

/// A_i: Taylor coefficients of u^(Nbs-1) (u-1)^(Nfj-1) about u = 1/varrho,
/// indexed so that A_i multiplies (u - 1/varrho)^(-i) in the partial-fraction
/// expansion with denominator (u - 1/varrho)^(Nbs+Nfj).  Computed by exact
/// binomial convolution (no numerical differentiation).
PartialFractionCoeffs coeffs_A(int n_bs, int n_fj, double varrho);

/// B_i = C(Nfj-1, N-i) (varrho-1)^(i-Nbs-1)   (zero for i <= Nbs)
/// D_i mirrors B with (1-varrho) in place of (varrho-1).
/// C_m (for pole order i) = (-1)^(i-1-m) varrho^(m-i), m = 1..i-1: the
/// expansion of [(u-varrho)^(1-i) - (-varrho)^(1-i)]/u over (u-varrho)^(-m).
PartialFractionCoeffs coeffs_BCD(CoeffKind kind, int n_bs, int n_fj, double varrho,
                                 int order = 0);

/// ln of  Gamma(n_fj+n_bs) / (Gamma(n_fj) Gamma(n_bs)) * ratio^n_bs,
/// the normalizer of the gain-ratio density, kept in log space so antenna
/// counts up to several hundred stay finite.
double log_gamma_ratio_prefactor(int n_fj, int n_bs, double ratio);

}  // namespace secrecy
