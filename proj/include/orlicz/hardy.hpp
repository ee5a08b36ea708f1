// Copyright (c) 2026 the orliczlab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "orlicz/norms.hpp"
#include "orlicz/phi.hpp"
#include "orlicz/step.hpp"

namespace orlicz {

/// One piece of f** or f_**: value A + B/x on [x_lo, x_hi). The final piece
/// of f** has x_hi = +inf (pure B/x tail); f_** vanishes beyond the support.
struct HardyPiece {
    double x_lo, x_hi;
    double A, B;
    double eval(double x) const { return A + B / x; }
};

/// Monotone step sandwich of a Hardy-operator output together with its exact
/// piecewise form. lower <= exact <= upper pointwise on the covered window.
struct HardyEnvelope {
    StepFunction lower, upper;
    int refinement_depth = 0;
    double window_hi = 0.0;            // upper envelope covers [0, window_hi)
    std::vector<HardyPiece> exact;     // the exact operator output
    double tail_B = 0.0;               // f** = tail_B / x beyond the support (0 for f_**)
    double support_end = 0.0;
};

/// f**(x) = (1/x)∫_0^x f*(ξ)dξ, exact per-cell with step envelopes refined to
/// `depth` subdivisions per cell.
HardyEnvelope hardy_star(const StepFunction& f, int depth = 4);

/// f_**(x) = f*(x) + (1/x)∫_x^∞ f*(ξ)dξ; pure B/x on every cell.
HardyEnvelope hardy_lowerstar(const StepFunction& f, int depth = 4);

/// Certified bracket [||lower||_{F,G}, ||upper + exact tail||_{F,G}]; the
/// envelope is refined until the bracket is within tol or the depth cap is
/// reached (then `capped` is set and the widest achieved bracket returned).
struct EnvelopeNorm {
    NormResult bracket;
    int depth_used = 0;
    bool capped = false;
};
EnvelopeNorm norm_of_envelope(const PhiFunction& F, const PhiFunction& G, const HardyEnvelope& env,
                              double tol, int depth_cap = 1 << 14);

/// Tight value of ||h||_{F,G} for the exact piecewise form (h nonincreasing):
/// closed forms on pure-power and B/x pieces, adaptive quadrature on mixed
/// pieces. Not a certified bracket; pairs with norm_of_envelope as the
/// independent route.
double hardy_norm_exact(const PhiFunction& F, const PhiFunction& G, const HardyEnvelope& env,
                        double tol = 1e-12);

} // namespace orlicz
