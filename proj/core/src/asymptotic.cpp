#include "secrecy/asymptotic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "float128.hpp"

namespace secrecy {

double i11(double gamma_mr_bar) {
    if (!(gamma_mr_bar > 0.0)) throw std::invalid_argument("i11: gamma_mr_bar > 0");
    return std::log(gamma_mr_bar) - kEulerGamma;
}

namespace {

using detail::f128;

f128 log_norm_q(int n_fj, int n_bs, f128 r) {
    return detail::q_lgamma((f128)(n_fj + n_bs)) - detail::q_lgamma((f128)n_fj) -
           detail::q_lgamma((f128)n_bs) + (f128)n_bs * detail::q_log(r);
}

void check_args(int n_bs, int n_fj, double varrho, const char* who) {
    if (n_bs < 1 || n_fj < 1) throw std::invalid_argument(std::string(who) + ": counts >= 1");
    if (!(varrho > 1.0)) throw std::invalid_argument(std::string(who) + ": varrho must exceed 1");
}

/* M_i = int_0^1 ln(u) (u - varrho)^{-i} du through the recurrence
 *
 *   Y_1 = ln((varrho-1)/varrho) / varrho
 *   Y_i = (T_i - Y_{i-1}) / varrho,
 *   T_i = ((1-varrho)^{1-i} - (-varrho)^{1-i}) / (1-i)
 *   M_i = Y_{i-1} / (i-1),  i >= 2.
 *
 * Upward is contracting for every varrho > 1 (relative error shrinks by
 * (varrho-1)/varrho per step), unlike the explicit partial-fraction sum whose
 * terms cancel tens of digits on near-unit varrho.
 */
std::vector<f128> y_list(int imax, f128 rho_) {
    std::vector<f128> y(static_cast<std::size_t>(imax) + 1, 0.0);
    y[1] = detail::q_log((rho_ - 1.0) / rho_) / rho_;
    for (int i = 2; i <= imax; ++i) {
        // (1-varrho)^{1-i} and (-varrho)^{1-i} share the sign (-1)^{1-i}
        const f128 mag = detail::q_powi(rho_ - 1.0, 1 - i) - detail::q_powi(rho_, 1 - i);
        const f128 sign = (i % 2 == 0) ? -1.0 : 1.0;  // (-1)^{1-i}
        const f128 t = sign * mag / (f128)(1 - i);
        y[static_cast<std::size_t>(i)] = (t - y[static_cast<std::size_t>(i) - 1]) / rho_;
    }
    return y;
}

/* V_i = int_0^inf (x+r)^{-i} / (1+2x) dx from
 *   V_1 = ln(2r)/(2r-1),  V_{i+1} = (V_i - r^{-i}/(2i)) / h,   h = r - 1/2.
 * Upward divides the error by h: relatively stable for r < 1/4; otherwise run
 * downward (multiplies by h) from a zero seed far above the needed order.
 */
std::vector<f128> v_list(int imax, f128 r) {
    std::vector<f128> v(static_cast<std::size_t>(imax) + 1, 0.0);
    const f128 h = r - (f128)0.5;
    if (static_cast<double>(r) < 0.25) {
        v[1] = detail::q_log(2.0 * r) / (2.0 * r - 1.0);
        for (int i = 1; i < imax; ++i)
            v[static_cast<std::size_t>(i) + 1] =
                (v[static_cast<std::size_t>(i)] - detail::q_powi(r, -i) / (f128)(2 * i)) / h;
        return v;
    }
    const double hr = std::abs(static_cast<double>(h)) / static_cast<double>(r);
    int pad = 80;
    if (hr > 1e-12) {
        const double need = 42.0 * std::numbers::ln10 / -std::log(hr);
        if (need > pad) pad = static_cast<int>(std::min(need + 1.0, 40000.0));
    }
    f128 acc = 0.0;
    for (int i = imax + pad; i >= 1; --i) {
        acc = detail::q_powi(r, -i) / (f128)(2 * i) + h * acc;
        if (i <= imax) v[static_cast<std::size_t>(i)] = acc;
    }
    return v;
}

}  // namespace

double i12(int n_bs, int n_fj, double varrho) {
    check_args(n_bs, n_fj, varrho, "i12");
    const f128 rho_ = (f128)varrho;
    const f128 r = rho_ - 1.0;
    const int n = n_bs + n_fj;
    const std::vector<f128> y = y_list(n, rho_);
    // B_i = C(Nfj-1, n-i) r^{i-Nbs-1}, nonzero for i > Nbs; overall sign
    // (-1)^{Nbs+1} from mapping the expansion onto (u-varrho) powers
    f128 sum = 0.0;
    f128 binom = 1.0;  // C(Nfj-1, k) built downward from k = Nfj-1
    // iterate i = Nbs+1 .. n  <->  k = n-i = Nfj-1 .. 0
    std::vector<f128> binoms(static_cast<std::size_t>(n_fj), 0.0);
    for (int k = 0; k < n_fj; ++k) {
        if (k > 0) binom = binom * (f128)(n_fj - k) / (f128)k;
        binoms[static_cast<std::size_t>(k)] = binom;
    }
    for (int i = std::max(2, n_bs + 1); i <= n; ++i) {
        const int k = n - i;
        const f128 b_i = binoms[static_cast<std::size_t>(k)] * detail::q_powi(r, i - n_bs - 1);
        const f128 m_i = y[static_cast<std::size_t>(i) - 1] / (f128)(i - 1);
        sum += b_i * m_i;
    }
    const f128 sign = (n_bs % 2 == 0) ? -1.0 : 1.0;  // (-1)^{Nbs+1}
    const double out =
        static_cast<double>(sign * detail::q_exp(log_norm_q(n_fj, n_bs, r)) * sum);
    if (!std::isfinite(out)) throw std::runtime_error("i12: assembly overflowed");
    if (out > 1e-12) throw std::runtime_error("i12: branch handling failed (positive value)");
    return out;
}

double i12(const NetworkConfig& cfg) {
    if (cfg.n_fj < 1) throw std::invalid_argument("i12: needs a jammer");
    return i12(cfg.n_bs, cfg.n_fj, cfg.varrho());
}

double i13(int n_bs, int n_fj, double varrho) {
    check_args(n_bs, n_fj, varrho, "i13");
    const f128 r = (f128)varrho - 1.0;
    const int n = n_bs + n_fj;
    const std::vector<f128> v = v_list(n, r);
    f128 sum = 0.0;
    f128 binom = 1.0;
    std::vector<f128> binoms(static_cast<std::size_t>(n_fj), 0.0);
    for (int k = 0; k < n_fj; ++k) {
        if (k > 0) binom = binom * (f128)(n_fj - k) / (f128)k;
        binoms[static_cast<std::size_t>(k)] = binom;
    }
    // D_i = C(Nfj-1, n-i) (-r)^{i-Nbs-1};  L_i = 2 V_{i-1} / (i-1)
    for (int i = n_bs + 1; i <= n; ++i) {
        const int k = n - i;
        const f128 d_i = binoms[static_cast<std::size_t>(k)] * detail::q_powi(-r, i - n_bs - 1);
        const f128 l_i = (f128)2.0 * v[static_cast<std::size_t>(i) - 1] / (f128)(i - 1);
        sum += d_i * l_i;
    }
    const double out = static_cast<double>(detail::q_exp(log_norm_q(n_fj, n_bs, r)) * sum);
    if (!std::isfinite(out)) throw std::runtime_error("i13: assembly overflowed");
    if (out < -1e-12) throw std::runtime_error("i13: branch handling failed (negative value)");
    return out;
}

double i13(const NetworkConfig& cfg) {
    if (cfg.n_fj < 1) throw std::invalid_argument("i13: needs a jammer");
    return i13(cfg.n_bs, cfg.n_fj, cfg.varrho());
}

EssrEstimate essr_asymptotic(const NetworkConfig& cfg) {
    validate_config(cfg);
    // without a jammer the gain ratio is identically zero and both ratio
    // expectations vanish
    const double v12 = cfg.n_fj > 0 ? i12(cfg) : 0.0;
    const double v13 = cfg.n_fj > 0 ? i13(cfg) : 0.0;
    const double sum = 2.0 * i11(cfg.gamma_mr_bar()) + v12 - v13 -
                       2.0 * std::numbers::ln2;
    EssrEstimate e;
    e.method = EssrMethod::Asymptotic;
    e.value = std::max(0.0, sum / (2.0 * std::numbers::ln2));
    return e;
}

AsymptoticResult slope_offset(const NetworkConfig& cfg) {
    validate_config(cfg);
    AsymptoticResult r;
    r.slope = 1.0;
    const double two_ln2 = 2.0 * std::numbers::ln2;
    const double v12 = cfg.n_fj > 0 ? i12(cfg) : 0.0;
    const double v13 = cfg.n_fj > 0 ? i13(cfg) : 0.0;
    r.offset = -std::log2(cfg.mu_mr) - v12 / two_ln2 + v13 / two_ln2 +
               kEulerGamma / std::numbers::ln2 + 1.0;
    return r;
}

double power_offset_simplified(const NetworkConfig& cfg) {
    validate_config(cfg);
    if (cfg.n_bs < 2) throw std::invalid_argument("power_offset_simplified: requires n_bs >= 2");
    const double mean_ratio =
        cfg.n_fj * cfg.mu_fr / (static_cast<double>(cfg.n_bs - 1) * cfg.mu_br);
    return -std::log2(cfg.mu_mr) + 3.0 * mean_ratio / std::numbers::ln2 +
           kEulerGamma / std::numbers::ln2 + 1.0;
}

}  // namespace secrecy
