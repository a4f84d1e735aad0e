// Internal extended-precision helpers.  The closed-form rate expressions sum
// partial-fraction terms whose magnitudes dwarf the result (the worst grid
// point cancels ~20 decimal digits), so the assemblies run in IEEE binary128
// and only the final value is narrowed to double.
#pragma once

#include <quadmath.h>

#include <cmath>

namespace secrecy::detail {

using f128 = __float128;

inline f128 q_exp(f128 x) { return expq(x); }
inline f128 q_log(f128 x) { return logq(x); }
inline f128 q_abs(f128 x) { return fabsq(x); }
inline f128 q_sqrt(f128 x) { return sqrtq(x); }
inline f128 q_lgamma(f128 x) { return lgammaq(x); }

inline f128 q_powi(f128 base, long n) {
    if (n < 0) return 1.0 / q_powi(base, -n);
    f128 r = 1.0, b = base;
    while (n > 0) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

/// E1(x) in binary128: power series below 1.2, modified-Lentz continued
/// fraction above.  Relative accuracy ~1e-32; plenty against the ~1e-20
/// term cancellation headroom the assemblies need.
inline f128 q_e1(f128 x) {
    const f128 euler = 0.57721566490153286060651209008240243Q;
    if (x <= 0.0) return HUGE_VALQ;
    if (x <= 1.2Q) {
        f128 sum = 0.0, term = 1.0;
        for (int k = 1; k < 60; ++k) {
            term *= -x / k;
            f128 add = -term / k;
            sum += add;
            if (q_abs(add) < 1e-36Q * (q_abs(sum) + 1e-30Q)) break;
        }
        return -euler - q_log(x) + sum;
    }
    // Lentz for E1(x) = e^{-x} * CF, CF = 1/(x+1- 1/(x+3- 4/(x+5- ...)))
    const f128 tiny = 1e-4000Q;
    f128 b = x + 1.0;
    f128 c = 1.0 / tiny, d = 1.0 / b, h = d;
    for (int i = 1; i < 300; ++i) {
        f128 a = -(f128)i * (f128)i;
        b += 2.0;
        d = a * d + b;
        if (q_abs(d) < tiny) d = tiny;
        c = b + a / c;
        if (q_abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        f128 del = d * c;
        h *= del;
        if (q_abs(del - 1.0) < 1e-34Q) break;
    }
    return q_exp(-x) * h;
}

/// exp(x) * E1(x) without overflow for large x.
inline f128 q_e1_scaled(f128 x) {
    if (x <= 1.2Q) return q_exp(x) * q_e1(x);
    const f128 tiny = 1e-4000Q;
    f128 b = x + 1.0;
    f128 c = 1.0 / tiny, d = 1.0 / b, h = d;
    for (int i = 1; i < 300; ++i) {
        f128 a = -(f128)i * (f128)i;
        b += 2.0;
        d = a * d + b;
        if (q_abs(d) < tiny) d = tiny;
        c = b + a / c;
        if (q_abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        f128 del = d * c;
        h *= del;
        if (q_abs(del - 1.0) < 1e-34Q) break;
    }
    return h;
}

}  // namespace secrecy::detail
