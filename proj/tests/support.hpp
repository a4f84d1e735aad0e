// Shared test helpers: a small deterministic RNG for property draws and
// chi-square critical values.
#pragma once

#include <cmath>
#include <cstdint>

#include "secrecy/channel.hpp"

namespace testsupport {

struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    double uniform() { return (static_cast<double>(next() >> 11) + 0.5) * 0x1p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

// Wilson-Hilferty approximation of the chi-square 99th percentile; relative
// accuracy ~1e-3 for df >= 20, plenty for a goodness-of-fit gate.
inline double chi2_crit_99(int df) {
    const double z = 2.3263478740408408;  // Phi^{-1}(0.99)
    const double a = 2.0 / (9.0 * df);
    const double c = 1.0 - a + z * std::sqrt(a);
    return df * c * c * c;
}

// draw with gamma_br >> gamma_mr >> 1, moderately jammed: the validity
// regime of the closed-form power split
inline secrecy::ChannelRealization in_regime(Rng& rng) {
    secrecy::ChannelRealization ch;
    ch.gamma_mr = rng.uniform(10.0, 100.0);
    ch.gamma_br = ch.gamma_mr * rng.uniform(50.0, 500.0);
    ch.gamma_fr = ch.gamma_br * rng.uniform(0.0, 0.3);
    return ch;
}

}  // namespace testsupport
