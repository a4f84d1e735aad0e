#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <sstream>

#include "secrecy/model.hpp"

using namespace secrecy;

TEST_CASE("path gains from the reference geometry") {
    NodePositions pos;  // BS(-1,0), MU(1,0), relay(0,0), FJ(0.3,0.4)
    const GainTriple g = gains_from_geometry(pos, 2.0);
    CHECK(g.mu_br == doctest::Approx(1.0));
    CHECK(g.mu_mr == doctest::Approx(1.0));
    CHECK(g.mu_fr == doctest::Approx(4.0));  // distance 0.5, 0.5^-2
}

TEST_CASE("unit distance yields unit gain for any exponent") {
    NodePositions pos;
    pos.fj = {0.0, 1.0};
    for (double alpha : {0.5, 1.0, 2.0, 3.7}) {
        CHECK(gains_from_geometry(pos, alpha).mu_fr == doctest::Approx(1.0));
    }
}

TEST_CASE("geometry scale covariance") {
    NodePositions pos;
    NodePositions scaled;
    const double s = 3.0;
    scaled.bs = {pos.bs.x * s, pos.bs.y * s};
    scaled.mu = {pos.mu.x * s, pos.mu.y * s};
    scaled.relay = {pos.relay.x * s, pos.relay.y * s};
    scaled.fj = {pos.fj.x * s, pos.fj.y * s};
    for (double alpha : {1.0, 2.0, 2.5}) {
        const GainTriple a = gains_from_geometry(pos, alpha);
        const GainTriple b = gains_from_geometry(scaled, alpha);
        const double f = std::pow(s, -alpha);
        CHECK(b.mu_br == doctest::Approx(a.mu_br * f).epsilon(1e-12));
        CHECK(b.mu_mr == doctest::Approx(a.mu_mr * f).epsilon(1e-12));
        CHECK(b.mu_fr == doctest::Approx(a.mu_fr * f).epsilon(1e-12));
    }
}

TEST_CASE("degenerate geometry is rejected") {
    NodePositions pos;
    pos.fj = {0.0, 0.0};  // on the relay
    CHECK_THROWS_AS(gains_from_geometry(pos, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(gains_from_geometry(NodePositions{}, 0.0), std::invalid_argument);
}

TEST_CASE("mean gains are linear in rho") {
    NetworkConfig cfg;
    cfg.rho = 50.0;
    NetworkConfig twice = cfg;
    twice.rho = 100.0;
    CHECK(twice.gamma_br_bar() == doctest::Approx(2.0 * cfg.gamma_br_bar()));
    CHECK(twice.gamma_mr_bar() == doctest::Approx(2.0 * cfg.gamma_mr_bar()));
    CHECK(twice.gamma_fr_bar() == doctest::Approx(2.0 * cfg.gamma_fr_bar()));
}

TEST_CASE("regime flags for the reference setup") {
    // n_bs=64, n_fj=1, mu=(1,1,4), rho=100, thresholds 10x:
    //   lsma  64*100/100 = 64      -> true
    //   mr    100                  -> true
    //   jam   1*400/100 = 4        -> false (under the 10x threshold)
    //   lam   400/6400 < 1         -> true
    NetworkConfig cfg;
    cfg.rho = 100.0;
    const RegimeReport r = regime_check(cfg);
    CHECK(r.lsma_ratio == doctest::Approx(64.0));
    CHECK(r.mr_level == doctest::Approx(100.0));
    CHECK(r.jammer_ratio == doctest::Approx(4.0));
    CHECK(r.lambda_ratio == doctest::Approx(400.0 / 6400.0));
    CHECK(r.lsma_ok);
    CHECK(r.high_mr_ok);
    CHECK_FALSE(r.jammer_dominant_ok);
    CHECK(r.lambda_feasible_ok);
    CHECK(r.flags() == "1101");
}

TEST_CASE("regime flags: single antenna with equal gains at unit SNR") {
    NetworkConfig cfg;
    cfg.n_bs = 1;
    cfg.n_fj = 1;
    cfg.mu_fr = 1.0;
    cfg.rho = 1.0;
    const RegimeReport r = regime_check(cfg);
    CHECK_FALSE(r.lsma_ok);
    CHECK_FALSE(r.high_mr_ok);
}

TEST_CASE("regime flags without a jammer") {
    NetworkConfig cfg;
    cfg.n_fj = 0;
    const RegimeReport r = regime_check(cfg);
    CHECK_FALSE(r.jammer_dominant_ok);
    CHECK(r.lambda_feasible_ok);
}

TEST_CASE("config parsing: gains, dB conversion, epsilon overrides") {
    std::istringstream in(
        "# comment\n"
        "n_bs = 128\n"
        "n_fj = 2\n"
        "rho_db = 20\n"
        "gains.mu_br = 1\n"
        "gains.mu_mr = 0.5\n"
        "gains.mu_fr = 2.5\n"
        "epsilon_relay = 1\n"
        "epsilon_users = 0\n");
    const LoadedConfig lc = parse_config(in);
    CHECK(lc.config.n_bs == 128);
    CHECK(lc.config.n_fj == 2);
    CHECK(lc.config.rho == doctest::Approx(100.0));
    CHECK(lc.config.mu_mr == doctest::Approx(0.5));
    CHECK(lc.config.eps_relay == 1.0);
    CHECK(lc.config.eps_users == 0.0);
    CHECK_FALSE(lc.had_geometry);
}

TEST_CASE("config parsing: geometry wins over explicit gains with a warning") {
    std::istringstream in(
        "rho_db = 10\n"
        "alpha = 2\n"
        "gains.mu_fr = 99\n"
        "positions.bs = -1 0\n"
        "positions.mu = 1 0\n"
        "positions.relay = 0 0\n"
        "positions.fj = 0.3 0.4\n");
    const LoadedConfig lc = parse_config(in);
    CHECK(lc.had_geometry);
    CHECK(lc.config.mu_fr == doctest::Approx(4.0));
    bool warned = false;
    for (const auto& w : lc.warnings) warned |= w.find("geometry wins") != std::string::npos;
    CHECK(warned);
}

TEST_CASE("config parsing rejects malformed input") {
    std::istringstream bad_key("nonsense = 3\n");
    CHECK_THROWS_AS(parse_config(bad_key), std::runtime_error);
    std::istringstream bad_num("n_bs = many\n");
    CHECK_THROWS_AS(parse_config(bad_num), std::runtime_error);
    std::istringstream bad_line("n_bs 64\n");
    CHECK_THROWS_AS(parse_config(bad_line), std::runtime_error);
}

TEST_CASE("config validation") {
    NetworkConfig cfg;
    cfg.n_bs = 0;
    CHECK_THROWS_AS(validate_config(cfg), std::invalid_argument);
    cfg = NetworkConfig{};
    cfg.rho = -1.0;
    CHECK_THROWS_AS(validate_config(cfg), std::invalid_argument);
    cfg = NetworkConfig{};
    cfg.mu_mr = 0.0;
    CHECK_THROWS_AS(validate_config(cfg), std::invalid_argument);
    // mu_fr is ignored without a jammer
    cfg = NetworkConfig{};
    cfg.n_fj = 0;
    cfg.mu_fr = 0.0;
    CHECK_NOTHROW(validate_config(cfg));
}
