// Copyright (c) 2026 the orliczlab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace orlicz {

/// Segment slope kept as a ratio so that reciprocals and products stay exact
/// under inversion and composition.
struct Slope {
    double num = 1.0;
    double den = 1.0;

    double value() const { return num / den; }
    Slope recip() const { return {den, num}; }
    Slope operator*(const Slope& o) const { return {num * o.num, den * o.den}; }
    /// s / (s - 1), the Hölder-conjugate exponent.
    Slope conjugate() const { return {num, num - den}; }
    bool same_value(const Slope& o) const { return num * o.den == o.num * den; }
};

enum class PhiProvenance {
    power,
    loglog,
    compose,
    inverse,
    tilde,
    complementary,
    counterexample,
};

/// A φ-function: continuous, strictly increasing F:[0,∞)→[0,∞) with F(0)=0
/// and F(∞)=∞, represented exactly as a piecewise-linear graph in log-log
/// coordinates (u = ln t, v = ln F(t)) with declared tail slopes.
///
/// Everything is computed in the log domain; linear values only materialize
/// at the API boundary, so graphs whose breakpoints overflow double precision
/// in linear scale stay exact.
class PhiFunction {
public:
    /// Pure power t^p, anchored at (0,0).
    static PhiFunction power(double p);

    /// From explicit log-log knots. vs must be consistent with strictly
    /// positive slopes; adjacent equal-slope segments are merged.
    static PhiFunction from_knots(std::vector<double> us, std::vector<double> vs,
                                  Slope tail_lo, Slope tail_hi,
                                  PhiProvenance prov = PhiProvenance::loglog);

    // -- evaluation ---------------------------------------------------------

    /// v(u) = ln F(e^u).
    double value_log(double u) const;
    /// u with v(u) = v (the inverse in log coordinates).
    double arg_log(double v) const;
    /// F(t) for t >= 0; F(0) = 0. May overflow to inf for extreme graphs.
    double operator()(double t) const;
    /// F^{-1}(y) for y >= 0.
    double inverse_at(double y) const;
    /// Local slope at u (right-continuous at knots).
    double slope_at(double u) const;

    // -- structure ----------------------------------------------------------

    std::span<const double> knots_u() const { return us_; }
    std::span<const double> knots_v() const { return vs_; }
    std::size_t segment_count() const { return us_.size() - 1; }
    double segment_slope(std::size_t i) const;
    Slope tail_lo() const { return tail_lo_; }
    Slope tail_hi() const { return tail_hi_; }
    PhiProvenance provenance() const { return prov_; }

    /// Marks this graph as a finite truncation of an infinite declared
    /// pattern (set by the counterexample builders); index computations
    /// switch to window-scan mode for such functions.
    bool truncated_pattern() const { return pattern_; }
    const std::optional<std::pair<double, double>>& declared_mo() const { return declared_mo_; }

    PhiFunction with_pattern(std::optional<std::pair<double, double>> declared) const;

    /// e^s · F (vertical shift of the log-log graph).
    PhiFunction vshift(double s) const;

    friend PhiFunction inverse(const PhiFunction& f);
    friend PhiFunction tilde(const PhiFunction& f);
    friend PhiFunction compose(const PhiFunction& outer, const PhiFunction& inner);

private:
    PhiFunction() = default;
    void canonicalize();

    std::vector<double> us_, vs_;
    Slope tail_lo_{1.0, 1.0}, tail_hi_{1.0, 1.0};
    PhiProvenance prov_ = PhiProvenance::loglog;
    bool pattern_ = false;
    std::optional<std::pair<double, double>> declared_mo_;
};

PhiFunction inverse(const PhiFunction& f);
PhiFunction tilde(const PhiFunction& f);
PhiFunction compose(const PhiFunction& outer, const PhiFunction& inner);

// -- Matuszewska–Orlicz indices ----------------------------------------------

struct WindowPoint {
    double h;        // window length in log scale
    double inf_mean; // infimum of chord mean slope over position
    double sup_mean;
};

struct MatuszewskaIndices {
    double p_m = 0.0;
    double q_m = 0.0; // may be +inf
    enum class Method { exact_from_slopes, window_scan } method = Method::exact_from_slopes;
    std::vector<WindowPoint> window_curve; // attached for window-scan results
};

/// Extremal chord statistics of the graph over a ladder of window lengths.
std::vector<WindowPoint> window_scan(const PhiFunction& f, int ladder = 24);

/// p_m, q_m. Exact from the tail slopes for honest finite graphs; plateau
/// reads from a window scan (cross-checked against declared values) for
/// truncated patterns.
MatuszewskaIndices mo_indices(const PhiFunction& f);

enum class Tristate { yes, no, indeterminate };

Tristate is_dilatory(const PhiFunction& f);
Tristate satisfies_delta2(const PhiFunction& f);

// -- equivalence and the complementary function -------------------------------

/// Smallest c with F(t/c) <= G(t) <= F(ct) for all t, +inf if the tail
/// slopes differ.
double equivalence_constant(const PhiFunction& f, const PhiFunction& g);

/// F ≍ G with constant at most c_max (c_max >= 1).
bool equivalent(const PhiFunction& f, const PhiFunction& g, double c_max);

/// The canonical complementary function F*: F^{-1}(t)·F*^{-1}(t) = t exactly
/// on the represented grid. Requires every slope of F (tails included) to be
/// strictly greater than 1.
PhiFunction complementary(const PhiFunction& f);

struct NotNFunction : std::invalid_argument {
    explicit NotNFunction(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace orlicz
