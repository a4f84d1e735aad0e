#pragma once

#include <cmath>
#include <iosfwd>
#include <string>
#include <vector>

namespace secrecy {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

/// Planar placement of the four nodes. Distances are unitless; only the
/// distance from each transmitter to the relay matters for the channel gains.
struct NodePositions {
    Vec2 bs{-1.0, 0.0};
    Vec2 mu{1.0, 0.0};
    Vec2 relay{0.0, 0.0};
    Vec2 fj{0.3, 0.4};
};

/// Static network description shared by every module.
///
/// Gains are per-antenna-branch path-loss factors; the mean normalized link
/// gains are gamma_br_bar = rho*mu_br (and analogously for mr, fr) with
/// rho = P/sigma_n^2 in linear units.  n_fj = 0 encodes operation without a
/// jammer: mu_fr is ignored and the instantaneous jammer gain is identically
/// zero.
struct NetworkConfig {
    int n_bs = 64;
    int n_fj = 1;
    double mu_br = 1.0;
    double mu_mr = 1.0;
    double mu_fr = 4.0;
    double rho = 100.0;      // linear transmit SNR
    double alpha = 2.0;      // path-loss exponent (used only with geometry)
    double eps_users = 1.0;  // epsilon in the BS/MU SINR denominators
    double eps_relay = 0.0;  // epsilon in the relay SINR denominator

    double gamma_br_bar() const { return rho * mu_br; }
    double gamma_mr_bar() const { return rho * mu_mr; }
    double gamma_fr_bar() const { return n_fj > 0 ? rho * mu_fr : 0.0; }

    /// varrho = 1 + mean-gain ratio of the jammer and BS branches.
    double varrho() const { return 1.0 + (n_fj > 0 ? mu_fr / mu_br : 0.0); }

    NetworkConfig with_rho_db(double rho_db) const {
        NetworkConfig c = *this;
        c.rho = std::pow(10.0, rho_db / 10.0);
        return c;
    }
};

struct GainTriple {
    double mu_br;
    double mu_mr;
    double mu_fr;
};

/// d^(-alpha) path gains of the three transmitter-to-relay links.
/// Throws std::invalid_argument on degenerate geometry (a node on the relay).
GainTriple gains_from_geometry(const NodePositions& pos, double alpha);

/// Thresholds interpreting the ">>" conditions as "at least a factor of".
struct RegimeThresholds {
    double lsma = 10.0;    // (n_bs*gamma_br_bar) / gamma_mr_bar
    double mr = 10.0;      // gamma_mr_bar
    double jammer = 10.0;  // (n_fj*gamma_fr_bar) / gamma_mr_bar
};

/// Advisory flags for the asymptotic-regime assumptions.  Never blocks
/// computation; sweep output carries these so out-of-regime points are
/// visible in the data.
struct RegimeReport {
    bool lsma_ok = false;
    bool high_mr_ok = false;
    bool jammer_dominant_ok = false;
    bool lambda_feasible_ok = false;
    double lsma_ratio = 0.0;
    double mr_level = 0.0;
    double jammer_ratio = 0.0;
    double lambda_ratio = 0.0;  // aggregate jammer/BS mean-gain ratio; < 1 keeps lambda* < 1

    std::string flags() const;  // e.g. "1101" in the field order above
};

RegimeReport regime_check(const NetworkConfig& cfg, const RegimeThresholds& thr = {});

/// Result of reading a configuration file.  Geometry, when present, wins over
/// explicit gains; a warning records the override.
struct LoadedConfig {
    NetworkConfig config;
    bool had_geometry = false;
    NodePositions positions;
    std::vector<std::string> warnings;
};

/// Parses the flat key-value configuration format:
///
///   n_bs = 64
///   n_fj = 1
///   rho_db = 20
///   alpha = 2
///   positions.bs = -1 0
///   positions.fj = 0.3 0.4
///   gains.mu_br = 1
///   epsilon_relay = 0
///
/// '#' starts a comment.  rho_db is converted to linear rho.
/// Throws std::runtime_error on malformed input.
LoadedConfig parse_config(std::istream& in);
LoadedConfig load_config_file(const std::string& path);

void validate_config(const NetworkConfig& cfg);  // throws std::invalid_argument

}  // namespace secrecy
