#pragma once

#include <cstdint>
#include <optional>

#include "secrecy/opa.hpp"
#include "secrecy/special.hpp"

namespace secrecy {

enum class EssrMethod { MonteCarlo, ClosedForm, Asymptotic, Quadrature };
const char* to_string(EssrMethod m);

enum class ClampConvention {
    AverageThenClamp,  // [E{Rs}]^+  -- the I1+I2-I3 decomposition
    ClampThenAverage,  // E{[Rs]^+}
};
const char* to_string(ClampConvention c);

struct EssrEstimate {
    double value = 0.0;  // bits/s/Hz, >= 0
    EssrMethod method = EssrMethod::ClosedForm;
    double ci_halfwidth = 0.0;  // 95% normal CI (Monte Carlo only)
    std::int64_t trials = 0;
    ClampConvention convention = ClampConvention::AverageThenClamp;
};

struct MonteCarloOptions {
    bool lsma_sinr = false;  // evaluate the large-scale-antenna SINRs instead of the exact ones
    ClampConvention convention = ClampConvention::AverageThenClamp;
    int threads = 0;  // 0: hardware concurrency, capped by SECRECY_SIM_THREADS
    double opa_tol = 1e-9;
};

/// Per-component means (natural log) and both clamp conventions from one run.
struct MonteCarloDetail {
    double i1 = 0.0;  // E ln(1+gamma_BS)
    double i2 = 0.0;  // E ln(1+gamma_MU)
    double i3 = 0.0;  // E ln(1+gamma_R)
    double essr_avg_then_clamp = 0.0;
    double essr_clamp_then_avg = 0.0;
    double ci_avg_then_clamp = 0.0;
    double ci_clamp_then_avg = 0.0;
    std::int64_t trials = 0;
};

/// Worker pool size: explicit > 0 wins; otherwise SECRECY_SIM_THREADS, then
/// hardware concurrency.
int resolve_thread_count(int requested);

/// Seeded Monte Carlo average of the instantaneous secrecy sum rate with the
/// power split chosen per realization by `strategy`.  Deterministic for fixed
/// (cfg, strategy, trials, seed) regardless of thread count: trials are
/// counter-indexed and the reduction is a fixed pairwise tree over
/// compensated block sums.
EssrEstimate essr_montecarlo(const NetworkConfig& cfg, PowerStrategy strategy,
                             std::int64_t trials, std::uint64_t seed,
                             const MonteCarloOptions& opts = {});

MonteCarloDetail essr_montecarlo_detail(const NetworkConfig& cfg, PowerStrategy strategy,
                                        std::int64_t trials, std::uint64_t seed,
                                        const MonteCarloOptions& opts = {});

/// E{ln(1 + gamma_MU)} with gamma_MU = gamma_mr/2:
/// i2 = exp(2/gmr_bar) * E1(2/gmr_bar).  (The exponent sign is fixed by the
/// quadrature cross-check in the validation suite.)
double i2_closed(double gamma_mr_bar);

/// E{ln(1 + gamma_R)} with gamma_R = 1: exactly ln 2.
double i3_closed();

enum class EiBackend { Exact, Approx };

/// Closed-form E{ln(1+gamma_BS)} under the large-scale-antenna SINR: the
/// partial-fraction A-coefficients against the exponential-sum kernel, with
/// the resulting exponential-integral factors evaluated by the exact `e1`
/// (default) or by `ei_approx` itself.  Throws std::runtime_error if the
/// assembly produces a non-finite value.
double i1_closed(const NetworkConfig& cfg, const EiApproxParams& params,
                 EiBackend backend = EiBackend::Exact);

/// Quadrature oracle for the same expectation: integrates
/// exp(s) E1(s) against the gain-ratio density, s(z) = (1+2z)/((1-z)*gmr_bar).
double i1_quadrature(const NetworkConfig& cfg, double abs_tol = 1e-8);

/// CDF of gamma_BS (large-scale-antenna form) by quadrature over the ratio
/// density; used by tests and the validation suite.
double gamma_bs_cdf(double gamma, const NetworkConfig& cfg);

/// (I1 + I2 - I3) / (2 ln 2), clamped at zero.
EssrEstimate essr_closed(const NetworkConfig& cfg, const EiApproxParams& params);

}  // namespace secrecy
