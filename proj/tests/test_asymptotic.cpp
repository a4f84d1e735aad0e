#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <numbers>

#include "secrecy/asymptotic.hpp"
#include "secrecy/channel.hpp"
#include "secrecy/quadrature.hpp"

using namespace secrecy;

namespace {

NetworkConfig ratio_config(int n_bs, int n_fj, double varrho) {
    NetworkConfig cfg;
    cfg.n_bs = n_bs;
    cfg.n_fj = n_fj;
    cfg.mu_br = 1.0;
    cfg.mu_fr = varrho - 1.0;
    return cfg;
}

double i12_oracle(int n_bs, int n_fj, double varrho) {
    NetworkConfig cfg = ratio_config(n_bs, n_fj, varrho);
    auto f = [&](double x) {
        if (x <= 0.0 || x >= 1.0) return 0.0;
        return std::log1p(-x) * gamma_ratio_pdf(x, cfg);
    };
    const double r = varrho - 1.0;
    const double m = n_bs > 1 ? n_fj * r / (n_bs - 1.0) : n_fj * r;
    double sum = 0.0, prev = 0.0;
    for (double k : {m / 8.0, m, std::min(std::max(8.0 * m, 0.25), 0.5), 0.9, 0.99, 0.9999, 1.0}) {
        if (k > prev && k <= 1.0) {
            sum += integrate(f, prev, k, 5e-8).value;
            prev = k;
        }
    }
    return sum;
}

double i13_oracle(int n_bs, int n_fj, double varrho) {
    NetworkConfig cfg = ratio_config(n_bs, n_fj, varrho);
    auto f = [&](double x) {
        if (x <= 0.0) return 0.0;
        return std::log1p(2.0 * x) * gamma_ratio_pdf(x, cfg);
    };
    const double r = varrho - 1.0;
    const double m = n_bs > 1 ? n_fj * r / (n_bs - 1.0) : n_fj * r;
    double sum = 0.0, prev = 0.0;
    for (double k : {m / 8.0, m, 8.0 * m, 64.0 * m}) {
        if (k > prev) {
            sum += integrate(f, prev, k, 5e-8).value;
            prev = k;
        }
    }
    sum += integrate_to_inf(f, prev, 5e-8).value;
    return sum;
}

}  // namespace

TEST_CASE("mean log of the user gain") {
    CHECK(i11(1.0) == doctest::Approx(-0.5772156649).epsilon(1e-10));
    CHECK(i11(std::exp(kEulerGamma)) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(i11(100.0) == doctest::Approx(4.02796).epsilon(1e-5));
    // quadrature oracle: int ln(x) e^{-x/100}/100 dx
    const double oracle =
        integrate_to_inf([](double x) { return std::log(x) * std::exp(-x / 100.0) / 100.0; },
                         0.0, 1e-9)
            .value;
    CHECK(i11(100.0) == doctest::Approx(oracle).epsilon(1e-6));
    CHECK_THROWS_AS(i11(0.0), std::invalid_argument);
}

TEST_CASE("ratio log-expectations match their quadrature oracles (spot grid)") {
    // the full 3x4x4 grid runs in the acceptance suite; spot-check the corners
    for (auto [n_bs, n_fj, varrho] :
         {std::tuple{2, 1, 1.01}, std::tuple{8, 4, 1.0625}, std::tuple{64, 16, 3.0},
          std::tuple{64, 1, 1.0625}, std::tuple{8, 2, 1.5}, std::tuple{2, 16, 3.0}}) {
        CAPTURE(n_bs);
        CAPTURE(n_fj);
        CAPTURE(varrho);
        CHECK(std::abs(i12(n_bs, n_fj, varrho) - i12_oracle(n_bs, n_fj, varrho)) < 1e-6);
        CHECK(std::abs(i13(n_bs, n_fj, varrho) - i13_oracle(n_bs, n_fj, varrho)) < 1e-6);
    }
}

TEST_CASE("ratio log-expectations: signs") {
    for (auto [n_bs, n_fj, varrho] :
         {std::tuple{2, 1, 1.5}, std::tuple{16, 4, 1.01}, std::tuple{64, 16, 3.0}}) {
        CHECK(i12(n_bs, n_fj, varrho) < 0.0);
        CHECK(i13(n_bs, n_fj, varrho) > 0.0);
    }
}

TEST_CASE("ratio log-expectations: small-ratio first-order law") {
    // E{ln(1-x)} ~ -Nfj r/(Nbs-1), E{ln(1+2x)} ~ +2 Nfj r/(Nbs-1)
    const int n_bs = 64, n_fj = 1;
    const double varrho = 1.0625;
    const double lin = n_fj * (varrho - 1.0) / (n_bs - 1.0);
    CHECK(i12(n_bs, n_fj, varrho) == doctest::Approx(-lin).epsilon(0.08));
    CHECK(i13(n_bs, n_fj, varrho) == doctest::Approx(2.0 * lin).epsilon(0.12));
    CHECK(i13(n_bs, n_fj, varrho) == doctest::Approx(-2.0 * i12(n_bs, n_fj, varrho)).epsilon(0.1));
}

TEST_CASE("asymptotic rate: affine identity and slope") {
    NetworkConfig cfg;
    cfg.n_bs = 256;
    cfg.n_fj = 4;
    cfg.mu_fr = 4.0;
    cfg.rho = 1e4;
    const AsymptoticResult ar = slope_offset(cfg);
    CHECK(ar.slope == 1.0);
    const EssrEstimate e = essr_asymptotic(cfg);
    CHECK(e.value == doctest::Approx(ar.essr_at(cfg.rho)).epsilon(1e-12));
    // doubling rho adds exactly one bit
    NetworkConfig twice = cfg;
    twice.rho = 2.0 * cfg.rho;
    CHECK(essr_asymptotic(twice).value - e.value == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("asymptotic rate without a jammer reduces to the ratio-free form") {
    NetworkConfig cfg;
    cfg.n_fj = 0;
    cfg.rho = 1e4;
    const double expected =
        (2.0 * i11(cfg.gamma_mr_bar()) - 2.0 * std::numbers::ln2) / (2.0 * std::numbers::ln2);
    CHECK(essr_asymptotic(cfg).value == doctest::Approx(expected).epsilon(1e-12));
    // offset with mu_mr = 1 and no jamming: EulerGamma/ln2 + 1
    CHECK(slope_offset(cfg).offset ==
          doctest::Approx(kEulerGamma / std::numbers::ln2 + 1.0).epsilon(1e-10));
    CHECK(slope_offset(cfg).offset == doctest::Approx(1.83275).epsilon(1e-4));
}

TEST_CASE("power offset grows with jammer antennas") {
    NetworkConfig cfg;
    cfg.n_bs = 256;
    cfg.mu_fr = 4.0;
    double prev = -1e9;
    for (int n_fj : {4, 8, 16}) {
        cfg.n_fj = n_fj;
        const double off = slope_offset(cfg).offset;
        CHECK(off > prev);
        prev = off;
    }
}

TEST_CASE("simplified power offset law") {
    NetworkConfig cfg;
    cfg.n_bs = 256;
    cfg.n_fj = 1;
    cfg.mu_fr = 4.0;
    // strictly increasing in n_fj
    double prev = power_offset_simplified(cfg);
    for (int n_fj : {2, 4, 8}) {
        NetworkConfig c = cfg;
        c.n_fj = n_fj;
        const double v = power_offset_simplified(c);
        CHECK(v > prev);
        prev = v;
    }
    // strictly decreasing in n_bs
    prev = power_offset_simplified(cfg);
    for (int n_bs : {300, 400, 600}) {
        NetworkConfig c = cfg;
        c.n_bs = n_bs;
        const double v = power_offset_simplified(c);
        CHECK(v < prev);
        prev = v;
    }
    // agrees with the exact offset when the BS aggregate dominates
    CHECK(power_offset_simplified(cfg) ==
          doctest::Approx(slope_offset(cfg).offset).epsilon(0.05));
    NetworkConfig bad = cfg;
    bad.n_bs = 1;
    CHECK_THROWS_AS(power_offset_simplified(bad), std::invalid_argument);
}
