// Copyright (c) 2026 the orliczlab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <limits>

namespace orlicz::num {

inline constexpr double neg_inf = -std::numeric_limits<double>::infinity();
inline constexpr double pos_inf = std::numeric_limits<double>::infinity();

/// log(e^a + e^b), safe for widely separated magnitudes.
inline double logaddexp(double a, double b) {
    if (a == neg_inf) return b;
    if (b == neg_inf) return a;
    if (a < b) std::swap(a, b);
    return a + std::log1p(std::exp(b - a));
}

/// log(e^a - e^b) for a > b.
inline double logsubexp(double a, double b) {
    if (b == neg_inf) return a;
    return a + std::log1p(-std::exp(b - a));
}

/// ∫_{u1}^{u2} e^{alpha + beta u} du, u2 may be +inf (requires beta < 0 then).
inline double exp_affine_integral(double alpha, double beta, double u1, double u2) {
    if (u1 >= u2) return 0.0;
    if (u2 == pos_inf) {
        if (beta >= 0.0) return pos_inf;
        return -std::exp(alpha + beta * u1) / beta;
    }
    if (u1 == neg_inf) {
        if (beta <= 0.0) return pos_inf;
        return std::exp(alpha + beta * u2) / beta;
    }
    if (beta == 0.0) return std::exp(alpha) * (u2 - u1);
    // e^{alpha}(e^{beta u2} - e^{beta u1})/beta, keep the large exponent factored out
    const double w = beta * (u2 - u1);
    return std::exp(alpha + beta * u1) * std::expm1(w) / beta;
}

inline bool close_rel(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

} // namespace orlicz::num
