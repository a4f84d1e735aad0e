#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "secrecy/asymptotic.hpp"
#include "secrecy/essr.hpp"

namespace secrecy {

enum class SweepKind { SnrDb, NumFjAntennas, FjDistance };
const char* to_string(SweepKind k);
SweepKind sweep_kind_from_string(const std::string& name);
EssrMethod essr_method_from_string(const std::string& name);

struct SweepSpec {
    SweepKind kind = SweepKind::SnrDb;
    std::vector<double> values;  // non-empty, strictly increasing
    std::vector<PowerStrategy> strategies;
    std::vector<EssrMethod> methods;  // MonteCarlo / ClosedForm / Asymptotic
    std::int64_t trials = 100000;
    std::uint64_t seed = 1;
    bool lsma_sinr = false;
    ClampConvention convention = ClampConvention::AverageThenClamp;
    int threads = 0;  // 0: default pool size
    int ei_t = 20;    // exponential-sum order for the closed form
};

struct SweepRow {
    SweepKind kind;
    double sweep_value;
    PowerStrategy strategy;
    EssrMethod method;
    EssrEstimate estimate;
    std::string regime_flags;
};

struct SweepSummary {
    std::vector<SweepRow> rows;
    std::string csv_path;
};

/// Throws std::invalid_argument when the spec violates its invariants
/// (empty values/strategies, unsorted values, closed form without a jammer).
void validate_spec(const SweepSpec& spec, const NetworkConfig& cfg);

/// Applies one sweep value to the config.  SnrDb sets rho from dB;
/// NumFjAntennas sets n_fj; FjDistance moves the jammer to distance d along
/// its configured bearing and recomputes mu_fr via the path-loss law.
NetworkConfig apply_sweep_value(const SweepSpec& spec, const NetworkConfig& base,
                                const NodePositions& pos, double value);

/// Runs the sweep and writes one CSV row per (value x strategy x method).
/// Output is byte-stable for identical (spec, cfg, seed) regardless of the
/// worker pool size.  Metadata lines prefixed '#' precede the header row.
SweepSummary run_sweep(const SweepSpec& spec, const NetworkConfig& cfg,
                       const NodePositions& pos, std::ostream& out);
SweepSummary run_sweep_to_file(const SweepSpec& spec, const NetworkConfig& cfg,
                               const NodePositions& pos, const std::string& out_path);

}  // namespace secrecy
