#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace secrecy {

struct ValidationCheck {
    std::string name;
    bool passed = false;
    std::string details;  // small JSON object with the measured numbers
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool all_passed() const;
    std::string to_json() const;
};

/// Runs the oracle-equivalence suites: special-function identities, the
/// exponential-sum error measurement, the i2 exponent-sign cross-check, the
/// i12/i13 quadrature grid, power-allocation oracle equivalence, the
/// closed-form vs Monte Carlo comparison, and sweep determinism.
ValidationReport run_validation(std::int64_t mc_trials = 50000);

/// Writes the JSON report; returns process exit status (0 pass, 1 fail).
int run_validation_to_file(const std::string& out_path, std::int64_t mc_trials = 50000);

}  // namespace secrecy
