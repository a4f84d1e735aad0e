#pragma once

#include <functional>

namespace secrecy {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
};

/// Adaptive Gauss-Kronrod integration of f over the finite interval [a, b].
/// Throws std::runtime_error (reporting the achieved tolerance) if the
/// requested absolute tolerance cannot be met.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double abs_tol = 1e-10, int max_depth = 15);

/// Integration over [a, inf) via the map x = a + t/(1-t).
QuadratureResult integrate_to_inf(const std::function<double(double)>& f, double a,
                                  double abs_tol = 1e-10, int max_depth = 15);

}  // namespace secrecy
