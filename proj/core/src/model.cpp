#include "secrecy/model.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace secrecy {

namespace {

double dist(const Vec2& a, const Vec2& b) { return std::hypot(a.x - b.x, a.y - b.y); }

}  // namespace

GainTriple gains_from_geometry(const NodePositions& pos, double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("gains_from_geometry: alpha must be positive");
    const double d_br = dist(pos.bs, pos.relay);
    const double d_mr = dist(pos.mu, pos.relay);
    const double d_fr = dist(pos.fj, pos.relay);
    if (d_br <= 0.0 || d_mr <= 0.0 || d_fr <= 0.0)
        throw std::invalid_argument("gains_from_geometry: degenerate geometry");
    return {std::pow(d_br, -alpha), std::pow(d_mr, -alpha), std::pow(d_fr, -alpha)};
}

std::string RegimeReport::flags() const {
    std::string s;
    s += lsma_ok ? '1' : '0';
    s += high_mr_ok ? '1' : '0';
    s += jammer_dominant_ok ? '1' : '0';
    s += lambda_feasible_ok ? '1' : '0';
    return s;
}

RegimeReport regime_check(const NetworkConfig& cfg, const RegimeThresholds& thr) {
    RegimeReport r;
    const double gbr = cfg.gamma_br_bar();
    const double gmr = cfg.gamma_mr_bar();
    const double gfr = cfg.gamma_fr_bar();
    r.lsma_ratio = cfg.n_bs * gbr / gmr;
    r.mr_level = gmr;
    r.jammer_ratio = cfg.n_fj * gfr / gmr;
    r.lambda_ratio = cfg.n_fj * gfr / (cfg.n_bs * gbr);
    r.lsma_ok = r.lsma_ratio >= thr.lsma;
    r.high_mr_ok = r.mr_level >= thr.mr;
    r.jammer_dominant_ok = cfg.n_fj > 0 && r.jammer_ratio >= thr.jammer;
    r.lambda_feasible_ok = r.lambda_ratio < 1.0;
    return r;
}

void validate_config(const NetworkConfig& cfg) {
    if (cfg.n_bs < 1) throw std::invalid_argument("config: n_bs must be >= 1");
    if (cfg.n_fj < 0) throw std::invalid_argument("config: n_fj must be >= 0");
    if (!(cfg.rho > 0.0)) throw std::invalid_argument("config: rho must be positive");
    if (!(cfg.mu_br > 0.0) || !(cfg.mu_mr > 0.0))
        throw std::invalid_argument("config: channel gains must be positive");
    if (cfg.n_fj > 0 && !(cfg.mu_fr > 0.0))
        throw std::invalid_argument("config: mu_fr must be positive when a jammer is present");
    if (!(cfg.alpha > 0.0)) throw std::invalid_argument("config: alpha must be positive");
}

namespace {

Vec2 parse_vec2(const std::string& value, const std::string& key) {
    std::istringstream is(value);
    Vec2 v;
    if (!(is >> v.x >> v.y)) throw std::runtime_error("config: bad coordinate for " + key);
    return v;
}

double parse_num(const std::string& value, const std::string& key) {
    std::size_t pos = 0;
    double d;
    try {
        d = std::stod(value, &pos);
    } catch (const std::exception&) {
        throw std::runtime_error("config: bad number for " + key);
    }
    while (pos < value.size() && std::isspace(static_cast<unsigned char>(value[pos]))) ++pos;
    if (pos != value.size()) throw std::runtime_error("config: trailing junk for " + key);
    return d;
}

}  // namespace

LoadedConfig parse_config(std::istream& in) {
    LoadedConfig out;
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                throw std::runtime_error("config: expected key = value at line " +
                                         std::to_string(lineno));
            continue;
        }
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            const auto b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw std::runtime_error("config: empty key at line " + std::to_string(lineno));
        kv[key] = value;
    }

    NetworkConfig& c = out.config;
    bool have_rho = false;
    bool have_gains = false;
    for (const auto& [key, value] : kv) {
        if (key == "n_bs") c.n_bs = static_cast<int>(parse_num(value, key));
        else if (key == "n_fj") c.n_fj = static_cast<int>(parse_num(value, key));
        else if (key == "rho_db") { c.rho = std::pow(10.0, parse_num(value, key) / 10.0); have_rho = true; }
        else if (key == "alpha") c.alpha = parse_num(value, key);
        else if (key == "epsilon_relay") c.eps_relay = parse_num(value, key);
        else if (key == "epsilon_users") c.eps_users = parse_num(value, key);
        else if (key == "gains.mu_br") { c.mu_br = parse_num(value, key); have_gains = true; }
        else if (key == "gains.mu_mr") { c.mu_mr = parse_num(value, key); have_gains = true; }
        else if (key == "gains.mu_fr") { c.mu_fr = parse_num(value, key); have_gains = true; }
        else if (key == "positions.bs") { out.positions.bs = parse_vec2(value, key); out.had_geometry = true; }
        else if (key == "positions.mu") { out.positions.mu = parse_vec2(value, key); out.had_geometry = true; }
        else if (key == "positions.relay") { out.positions.relay = parse_vec2(value, key); out.had_geometry = true; }
        else if (key == "positions.fj") { out.positions.fj = parse_vec2(value, key); out.had_geometry = true; }
        else throw std::runtime_error("config: unknown key '" + key + "'");
    }
    if (!have_rho) out.warnings.push_back("rho_db not given; using default");
    if (out.had_geometry) {
        const GainTriple g = gains_from_geometry(out.positions, c.alpha);
        if (have_gains)
            out.warnings.push_back("both positions.* and gains.* given; geometry wins");
        c.mu_br = g.mu_br;
        c.mu_mr = g.mu_mr;
        c.mu_fr = g.mu_fr;
    }
    validate_config(c);
    return out;
}

LoadedConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    return parse_config(in);
}

}  // namespace secrecy
