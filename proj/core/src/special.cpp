#include "secrecy/special.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "coeffs_detail.hpp"
#include "float128.hpp"

namespace secrecy {

namespace {

constexpr double kEuler = 0.57721566490153286;

/* E1(x) = -Ei(-x), x > 0.
 *
 * Series (x <= 1.2):   E1(x) = -euler - ln x + sum_{k>=1} (-1)^{k+1} x^k/(k k!)
 * Continued fraction:  E1(x) = e^{-x} / (x+1- 1/(x+3- 4/(x+5- 9/(...))))
 * evaluated with the modified Lentz scheme.
 */
double e1_series(double x) {
    double sum = 0.0, term = 1.0;
    for (int k = 1; k < 40; ++k) {
        term *= -x / k;
        const double add = -term / k;
        sum += add;
        if (std::abs(add) < 1e-18 * (std::abs(sum) + 1e-18)) break;
    }
    return -kEuler - std::log(x) + sum;
}

double e1_cf_scaled(double x) {
    const double tiny = 1e-290;
    double b = x + 1.0;
    double c = 1.0 / tiny, d = 1.0 / b, h = d;
    for (int i = 1; i < 200; ++i) {
        const double a = -static_cast<double>(i) * i;
        b += 2.0;
        d = a * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + a / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16) break;
    }
    return h;
}

}  // namespace

double e1(double x) {
    if (!(x > 0.0)) throw std::domain_error("e1: argument must be positive");
    if (x <= 1.2) return e1_series(x);
    return std::exp(-x) * e1_cf_scaled(x);
}

double e1_scaled(double x) {
    if (!(x > 0.0)) throw std::domain_error("e1_scaled: argument must be positive");
    if (x <= 1.2) return std::exp(x) * e1_series(x);
    return e1_cf_scaled(x);
}

double ei(double x) {
    if (!(x < 0.0)) throw std::domain_error("ei: only negative arguments supported");
    return -e1(-x);
}

// ---------------------------------------------------------------------------
// Exponential-sum representation of Ei(-x)
// ---------------------------------------------------------------------------

namespace {

/* The grids discretize the exact identity
 *
 *   Ei(-x) = -(4/pi) II_{(0,pi/2]^2} csc(th) e^{-x csc^2(th) csc^2(ph)} dth dph
 *
 * (verified against quadrature to 30 digits).  The cot-secant slope of each
 * cell is the cell mean of csc^2, so b_p is a valid quadrature node and the
 * cell widths are the weights.  In cot-space the points run geometrically
 * from kVMax down to kVSplit (this is where the rate ladder b_p*b_q needs
 * log-uniform resolution), then linearly to zero; the q-grid is staggered
 * half a ratio step so the product rates interleave.  kVMax = 250 puts the
 * largest rate near 6e6, enough reach for 50 dB mean SNR.
 */
constexpr double kVMax = 250.0;
constexpr double kVSplit = 0.9;

std::vector<double> cot_ladder(int t, double stagger) {
    const int cells = t + 1;
    const int n_uni = std::max(2, static_cast<int>(std::lround(7.0 * (t + 1) / 21.0)));
    const int n_geo = cells - n_uni;
    const double kappa = std::pow(kVMax / kVSplit, 1.0 / n_geo);
    std::vector<double> v;
    v.reserve(cells + 1);
    const double v0 = kVMax * std::pow(kappa, -stagger);
    for (int i = 0; i <= n_geo; ++i) v.push_back(v0 * std::pow(kappa, -i));
    const double vlast = v.back();
    for (int i = 1; i <= n_uni; ++i) v.push_back(vlast * (1.0 - static_cast<double>(i) / n_uni));
    v.back() = 0.0;
    return v;
}

void fill_axis(int t, double stagger, double& theta0, std::vector<double>& theta,
               std::vector<double>& b, std::vector<double>& w) {
    const std::vector<double> v = cot_ladder(t, stagger);
    std::vector<double> th(v.size());
    for (size_t i = 0; i < v.size(); ++i) th[i] = std::atan2(1.0, v[i]);
    th.back() = std::numbers::pi / 2;
    theta0 = th.front();
    theta.assign(th.begin() + 1, th.end());
    b.resize(theta.size());
    w.resize(theta.size());
    for (size_t p = 1; p < th.size(); ++p) {
        b[p - 1] = (v[p - 1] - v[p]) / (th[p] - th[p - 1]);
        w[p - 1] = th[p] - th[p - 1];
    }
}

}  // namespace

EiApproxParams make_ei_approx_params(int t, int t_prime) {
    if (t < 1 || t_prime < 1) throw std::invalid_argument("make_ei_approx_params: T, T' >= 1");
    EiApproxParams p;
    p.t = t;
    p.t_prime = t_prime;
    fill_axis(t, 0.0, p.theta0_p, p.theta_p, p.b_p, p.w_p);
    fill_axis(t_prime, 0.5, p.theta0_q, p.theta_q, p.b_q, p.w_q);
    for (size_t i = 1; i < p.theta_p.size(); ++i)
        if (p.theta_p[i] <= p.theta_p[i - 1])
            throw std::logic_error("ei grid not strictly increasing");
    for (double bb : p.b_p)
        if (!(std::isfinite(bb) && bb > 0.0)) throw std::logic_error("ei grid slope not finite");
    return p;
}

double ei_approx(double x, const EiApproxParams& params) {
    if (!(x > 0.0)) throw std::domain_error("ei_approx: argument must be positive");
    double total = 0.0;
    for (size_t p = 0; p < params.b_p.size(); ++p) {
        const double wp = params.w_p[p] * std::sqrt(params.b_p[p]);
        double inner = 0.0;
        for (size_t q = 0; q < params.b_q.size(); ++q)
            inner += params.w_q[q] * std::exp(-params.b_p[p] * params.b_q[q] * x);
        total += wp * inner;
    }
    return -(4.0 / std::numbers::pi) * total;
}

// ---------------------------------------------------------------------------
// Dilogarithm
// ---------------------------------------------------------------------------

namespace {

// Series on |x| <= 1/2.
double dilog_series(double x) {
    double sum = 0.0, xk = x;
    for (int k = 1; k < 64; ++k) {
        sum += xk / (static_cast<double>(k) * k);
        xk *= x;
        if (std::abs(xk) < 1e-18) break;
    }
    return sum;
}

}  // namespace

double dilog(double x) {
    constexpr double pi2_6 = std::numbers::pi * std::numbers::pi / 6.0;
    if (x == 0.0) return 0.0;
    if (x == 1.0) return pi2_6;
    if (x > 1.0) {
        // real part of the continuation
        const double lx = std::log(x);
        return 2.0 * pi2_6 - 0.5 * lx * lx - dilog(1.0 / x);
    }
    if (x < -1.0) {
        const double l = std::log(-x);
        return -pi2_6 - 0.5 * l * l - dilog(1.0 / x);
    }
    if (x > 0.5) {
        // Euler reflection onto (0, 1/2]
        return pi2_6 - std::log(x) * std::log1p(-x) - dilog(1.0 - x);
    }
    if (x < -0.5) {
        // Landen: Li2(x) = -Li2(x/(x-1)) - ln^2(1-x)/2, x/(x-1) in (1/3, 1/2)
        const double l1 = std::log1p(-x);
        return -dilog(x / (x - 1.0)) - 0.5 * l1 * l1;
    }
    return dilog_series(x);
}

// ---------------------------------------------------------------------------
// Coefficient generators
// ---------------------------------------------------------------------------

namespace detail {

/* Taylor coefficients of P(u) = u^(Nbs-1) (u-1)^(Nfj-1) about u0, by exact
 * binomial convolution.  c[k] multiplies (u-u0)^k; deg P = Nbs+Nfj-2.
 * Numerical differentiation is hopeless here (the factorials in the highest
 * orders at N ~ 300 amplify noise beyond recovery), the convolution is exact.
 */
std::vector<f128> taylor_coeffs_q(int n_bs, int n_fj, f128 u0) {
    std::vector<f128> pa(n_bs), pb(n_fj);
    // binomials iteratively in f128
    f128 c = 1.0;
    for (int a = 0; a < n_bs; ++a) {
        if (a > 0) c = c * (f128)(n_bs - a) / (f128)a;
        pa[a] = c * q_powi(u0, n_bs - 1 - a);
    }
    c = 1.0;
    for (int b = 0; b < n_fj; ++b) {
        if (b > 0) c = c * (f128)(n_fj - b) / (f128)b;
        pb[b] = c * q_powi(u0 - 1.0, n_fj - 1 - b);
    }
    std::vector<f128> out(n_bs + n_fj - 1, 0.0);
    for (int a = 0; a < n_bs; ++a)
        for (int b = 0; b < n_fj; ++b) out[a + b] += pa[a] * pb[b];
    return out;
}

}  // namespace detail

PartialFractionCoeffs coeffs_A(int n_bs, int n_fj, double varrho) {
    if (n_bs < 1 || n_fj < 1) throw std::invalid_argument("coeffs_A: antenna counts >= 1");
    if (!(varrho > 1.0)) throw std::invalid_argument("coeffs_A: varrho must exceed 1");
    const int n = n_bs + n_fj;
    const auto c = detail::taylor_coeffs_q(n_bs, n_fj, (detail::f128)1.0 / (detail::f128)varrho);
    PartialFractionCoeffs out;
    out.kind = CoeffKind::A;
    out.n_bs = n_bs;
    out.n_fj = n_fj;
    out.varrho = varrho;
    out.values.resize(n);
    for (int i = 1; i <= n; ++i) {
        const int k = n - i;
        out.values[i - 1] = (k < static_cast<int>(c.size())) ? static_cast<double>(c[k]) : 0.0;
    }
    return out;
}

PartialFractionCoeffs coeffs_BCD(CoeffKind kind, int n_bs, int n_fj, double varrho, int order) {
    if (n_bs < 1 || n_fj < 1) throw std::invalid_argument("coeffs_BCD: antenna counts >= 1");
    if (!(varrho > 1.0)) throw std::invalid_argument("coeffs_BCD: varrho must exceed 1");
    PartialFractionCoeffs out;
    out.kind = kind;
    out.n_bs = n_bs;
    out.n_fj = n_fj;
    out.varrho = varrho;
    const int n = n_bs + n_fj;
    const double r = varrho - 1.0;
    switch (kind) {
        case CoeffKind::B:
        case CoeffKind::D: {
            // B_i = C(Nfj-1, N-i) (varrho-1)^(i-Nbs-1); zero until i = Nbs+1.
            out.values.assign(n, 0.0);
            const double base = (kind == CoeffKind::B) ? r : -r;
            for (int i = n_bs + 1; i <= n; ++i) {
                const int k = n - i;  // 0..Nfj-1
                double binom = 1.0;
                for (int j = 0; j < k; ++j) binom = binom * (n_fj - 1 - j) / (j + 1);
                out.values[i - 1] = binom * std::pow(base, i - n_bs - 1);
            }
            break;
        }
        case CoeffKind::C: {
            // expansion of [(u-varrho)^(1-i) - (-varrho)^(1-i)]/u over
            // (u-varrho)^(-m), m = 1..i-1:  C_m = (-1)^(i-1-m) varrho^(m-i)
            if (order < 2) throw std::invalid_argument("coeffs_BCD: kind C needs order >= 2");
            out.order = order;
            out.values.resize(order - 1);
            for (int m = 1; m <= order - 1; ++m) {
                const double sign = ((order - 1 - m) % 2 == 0) ? 1.0 : -1.0;
                out.values[m - 1] = sign * std::pow(varrho, m - order);
            }
            break;
        }
        case CoeffKind::A:
            return coeffs_A(n_bs, n_fj, varrho);
    }
    return out;
}

double log_gamma_ratio_prefactor(int n_fj, int n_bs, double ratio) {
    if (n_fj < 1 || n_bs < 1) throw std::invalid_argument("log_gamma_ratio_prefactor: counts >= 1");
    if (!(ratio > 0.0)) throw std::invalid_argument("log_gamma_ratio_prefactor: ratio > 0");
    return std::lgamma(static_cast<double>(n_fj) + n_bs) - std::lgamma(static_cast<double>(n_fj)) -
           std::lgamma(static_cast<double>(n_bs)) + n_bs * std::log(ratio);
}

}  // namespace secrecy
