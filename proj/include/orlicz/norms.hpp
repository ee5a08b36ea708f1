// Copyright (c) 2026 the orliczlab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>

#include "orlicz/phi.hpp"
#include "orlicz/step.hpp"

namespace orlicz {

enum class DivergentEnd { at_zero, at_infinity, both };

/// A certified bracket [lo, hi] for a functional value. The modular at the
/// returned midpoint is recorded for diagnostics; `divergent` is set instead
/// of a finite bracket when the defining integral cannot reach 1.
struct NormResult {
    double lo = 0.0;
    double hi = 0.0;
    double tol = 0.0;         // achieved relative width
    int bisection_steps = 0;
    double modular_at_mid = 0.0;
    std::optional<DivergentEnd> divergent;

    double value() const { return 0.5 * (lo + hi); }
    bool is_zero() const { return hi == 0.0; }
};

/// Luxemburg functional: inf{ c : Σ len_i · F(v_i / c) <= 1 }.
/// The modular is evaluated in closed form per cell; bisection runs on ln c
/// from an analytic initial bracket, so the result is a certified enclosure.
NormResult luxemburg_norm(const PhiFunction& F, const StepFunction& f, double tol = 1e-12);

/// Orlicz–Lorentz functional ||f||_{F,G} = ||f* ∘ F̃ ∘ G̃^{-1}||_G. The
/// rearranged breakpoints are transplanted through G̃ ∘ F̃^{-1} exactly in
/// log-log coordinates before delegating to the G-Luxemburg norm.
NormResult orlicz_lorentz_norm(const PhiFunction& F, const PhiFunction& G,
                               const StepFunction& f, double tol = 1e-12);

/// The defining integral of the Orlicz–Lorentz functional at a given c.
double orlicz_lorentz_modular(const PhiFunction& F, const PhiFunction& G, const StepFunction& f,
                              double c);

/// Torchinsky functional: inf{ c : ∫ G(F̃^{-1}(x) f*(x) / c) dx/x <= 1 }.
/// Each power piece integrates in closed form after the substitution
/// u = ln x.
NormResult torchinsky_norm(const PhiFunction& F, const PhiFunction& G,
                           const StepFunction& f, double tol = 1e-12);

/// Condition (J): the H*-Luxemburg norm of x ↦ 1/H̃*^{-1}(x). The integral
/// inside [cut.first, cut.second] is evaluated in closed form; outside, exact
/// power tails contribute a constant rate per log-unit (divergent), while a
/// truncated slope pattern with geometrically decaying contributions is
/// extrapolated to a finite bracket.
struct ConditionJResult {
    enum class Verdict { finite, divergent, indeterminate } verdict;
    std::optional<DivergentEnd> end;  // which end fails, for non-finite verdicts
    NormResult norm;                  // meaningful when finite
    double tail_rate_lo = 0.0;        // modular contribution per log-unit in the tails at c = e
    double tail_rate_hi = 0.0;
};

ConditionJResult condition_j_norm(const PhiFunction& H, std::pair<double, double> domain_cut,
                                  double tol = 1e-12);

} // namespace orlicz
