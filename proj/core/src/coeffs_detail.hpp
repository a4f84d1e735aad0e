// Internal: shared pieces between the special-function generators and the
// closed-form rate assemblies.
#pragma once

#include <vector>

#include "float128.hpp"

namespace secrecy::detail {

/// Exact Taylor coefficients of u^(Nbs-1) (u-1)^(Nfj-1) about u0.
std::vector<f128> taylor_coeffs_q(int n_bs, int n_fj, f128 u0);

}  // namespace secrecy::detail
