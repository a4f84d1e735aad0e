#include "secrecy/opa.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace secrecy {

const char* to_string(PowerStrategy s) {
    switch (s) {
        case PowerStrategy::OpaClosed: return "opa_closed";
        case PowerStrategy::OpaLsma: return "opa_lsma";
        case PowerStrategy::OpaNumeric: return "opa_numeric";
        case PowerStrategy::Epa: return "epa";
        case PowerStrategy::WoFjOpa: return "wofj_opa";
    }
    return "?";
}

PowerStrategy power_strategy_from_string(const std::string& name) {
    if (name == "opa_closed") return PowerStrategy::OpaClosed;
    if (name == "opa_lsma") return PowerStrategy::OpaLsma;
    if (name == "opa_numeric") return PowerStrategy::OpaNumeric;
    if (name == "epa") return PowerStrategy::Epa;
    if (name == "wofj_opa") return PowerStrategy::WoFjOpa;
    throw std::invalid_argument("unknown power strategy: " + name);
}

namespace {

PowerAllocation clamp_lambda(double lambda, PowerStrategy strategy) {
    PowerAllocation p;
    p.strategy = strategy;
    p.clipped = !(lambda > kLambdaMin && lambda < 1.0 - kLambdaMin);
    p.lambda = std::clamp(lambda, kLambdaMin, 1.0 - kLambdaMin);
    return p;
}

double ln_phi(const ChannelRealization& ch, double lambda, const NetworkConfig& cfg) {
    const SinrTriple s = sinrs(ch, lambda, cfg.eps_users, cfg.eps_relay);
    return std::log1p(s.gamma_bs) + std::log1p(s.gamma_mu) - std::log1p(s.gamma_r);
}

}  // namespace

PowerAllocation opa_closed(const ChannelRealization& ch) {
    const double gmr = ch.gamma_mr, gfr = ch.gamma_fr, gbr = ch.gamma_br;
    if (!(gbr > 0.0) || !(gmr > 0.0))
        throw std::domain_error("opa_closed: needs positive BS and MU gains");
    const double radicand = 2.0 * gmr * gmr + 3.0 * gmr * gfr - 2.0 * gmr + gfr * gfr - gfr;
    if (radicand < 0.0)
        throw std::domain_error("opa_closed: outside validity regime (negative radicand)");
    const double lambda = (-2.0 * gmr - gfr + gmr * std::sqrt(radicand)) / (gbr * gmr);
    return clamp_lambda(lambda, PowerStrategy::OpaClosed);
}

PowerAllocation opa_lsma(const ChannelRealization& ch) {
    if (!(ch.gamma_br > 0.0)) throw std::domain_error("opa_lsma: gamma_br must be positive");
    return clamp_lambda(ch.gamma_fr / ch.gamma_br, PowerStrategy::OpaLsma);
}

PowerAllocation opa_numeric(const ChannelRealization& ch, const NetworkConfig& cfg, double tol) {
    const double lo = kLambdaMin, hi = 1.0 - kLambdaMin;
    const double h = 1e-7;
    auto deriv_sign = [&](double l) {
        const double a = ln_phi(ch, std::min(l + h, hi), cfg);
        const double b = ln_phi(ch, std::max(l - h, lo), cfg);
        return a - b;
    };

    // probe the sign of d ln(Phi)/d lambda; quasi-concavity means one
    // + -> - crossing, anything else falls back to golden section
    constexpr int kProbes = 11;
    double xs[kProbes];
    bool pos[kProbes];
    for (int i = 0; i < kProbes; ++i) {
        xs[i] = lo + (hi - lo) * (i + 1) / (kProbes + 1.0);
        pos[i] = deriv_sign(xs[i]) > 0.0;
    }
    int first_neg = kProbes;
    bool fallback = false;
    for (int i = 0; i < kProbes; ++i) {
        if (!pos[i]) {
            first_neg = std::min(first_neg, i);
        } else if (i > first_neg) {
            fallback = true;  // sign pattern not single-crossing
            break;
        }
    }
    double bl, bh;
    if (first_neg == kProbes) {  // increasing throughout: maximum at hi
        bl = xs[kProbes - 1];
        bh = hi;
    } else if (first_neg == 0) {  // decreasing from the left edge
        bl = lo;
        bh = xs[0];
    } else {
        bl = xs[first_neg - 1];
        bh = xs[first_neg];
    }

    double lambda;
    if (fallback) {
        // golden-section search on ln Phi over the full interval
        const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
        double a = lo, b = hi;
        double c = b - invphi * (b - a), d = a + invphi * (b - a);
        double fc = ln_phi(ch, c, cfg), fd = ln_phi(ch, d, cfg);
        while (b - a > tol) {
            if (fc > fd) {
                b = d;
                d = c;
                fd = fc;
                c = b - invphi * (b - a);
                fc = ln_phi(ch, c, cfg);
            } else {
                a = c;
                c = d;
                fc = fd;
                d = a + invphi * (b - a);
                fd = ln_phi(ch, d, cfg);
            }
        }
        lambda = 0.5 * (a + b);
    } else {
        // shrink until the interval meets tol and the central difference of
        // ln Phi is flat at the 10*tol scale (the stationarity contract)
        for (int it = 0; it < 300; ++it) {
            const double mid = 0.5 * (bl + bh);
            const double d = deriv_sign(mid);
            if (bh - bl <= tol && std::abs(d) <= 16.0 * h * tol) break;
            if (bh - bl < 8.0 * std::numeric_limits<double>::epsilon()) break;
            if (d > 0.0)
                bl = mid;
            else
                bh = mid;
        }
        lambda = 0.5 * (bl + bh);
    }
    PowerAllocation p = clamp_lambda(lambda, PowerStrategy::OpaNumeric);
    if (lambda - lo < 2.0 * h || hi - lambda < 2.0 * h) p.clipped = true;
    return p;
}

PowerAllocation opa_grid_oracle(const ChannelRealization& ch, const NetworkConfig& cfg,
                                int steps) {
    if (steps < 100) throw std::invalid_argument("opa_grid_oracle: steps >= 100");
    double best_lambda = 0.0, best = -1e300;
    for (int j = 1; j <= steps; ++j) {
        const double l = static_cast<double>(j) / (steps + 1.0);
        const double v = ln_phi(ch, l, cfg);
        if (v > best) {  // strict: ties stay at the smaller lambda
            best = v;
            best_lambda = l;
        }
    }
    PowerAllocation p;
    p.lambda = best_lambda;
    p.strategy = PowerStrategy::OpaNumeric;
    p.clipped = false;
    return p;
}

NetworkConfig effective_config(PowerStrategy strategy, const NetworkConfig& cfg) {
    if (strategy != PowerStrategy::WoFjOpa) return cfg;
    NetworkConfig c = cfg;
    c.n_fj = 0;
    c.eps_relay = 1.0;  // without jamming the relay denominator is plain noise
    return c;
}

ChannelRealization effective_realization(PowerStrategy strategy, const ChannelRealization& ch) {
    if (strategy != PowerStrategy::WoFjOpa) return ch;
    ChannelRealization c = ch;
    c.gamma_fr = 0.0;
    return c;
}

PowerAllocation choose_lambda(PowerStrategy strategy, const ChannelRealization& ch,
                              const NetworkConfig& cfg, double tol) {
    switch (strategy) {
        case PowerStrategy::Epa: {
            PowerAllocation p;
            p.lambda = 0.5;
            p.strategy = PowerStrategy::Epa;
            return p;
        }
        case PowerStrategy::OpaLsma:
            return opa_lsma(ch);
        case PowerStrategy::OpaClosed:
            try {
                return opa_closed(ch);
            } catch (const std::domain_error&) {
                PowerAllocation p = opa_numeric(ch, cfg, tol);
                p.strategy = PowerStrategy::OpaClosed;
                return p;
            }
        case PowerStrategy::OpaNumeric:
            return opa_numeric(ch, cfg, tol);
        case PowerStrategy::WoFjOpa: {
            PowerAllocation p = opa_numeric(effective_realization(strategy, ch),
                                            effective_config(strategy, cfg), tol);
            p.strategy = PowerStrategy::WoFjOpa;
            return p;
        }
    }
    throw std::logic_error("choose_lambda: unreachable");
}

}  // namespace secrecy
