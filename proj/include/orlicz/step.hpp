// Copyright (c) 2026 the orliczlab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace orlicz {

/// A nonnegative simple function on [0,∞): finitely many constant cells laid
/// end to end from the origin, with an implicit zero tail. Cells are stored in
/// log scale so that supports and values far outside double range (the
/// counterexample witnesses) remain exact.
class StepFunction {
public:
    struct LogCell {
        double log_len; // ln(cell length), finite
        double log_val; // ln(cell value), -inf encodes a zero cell
    };

    StepFunction() = default;

    /// From (length, value) pairs in linear scale.
    static StepFunction from_cells(std::span<const std::pair<double, double>> cells);
    static StepFunction from_cells(std::initializer_list<std::pair<double, double>> cells);
    /// From (ln length, ln value) pairs.
    static StepFunction from_log_cells(std::vector<LogCell> cells, bool sorted_hint = false);
    /// value · χ_[0, len)
    static StepFunction indicator(double len, double value = 1.0);

    bool empty() const { return cells_.empty(); }
    std::size_t cell_count() const { return cells_.size(); }
    std::span<const LogCell> log_cells() const { return cells_; }
    /// Linear view; may overflow/underflow for extreme graphs.
    std::vector<std::pair<double, double>> cells() const;

    /// Zero iff almost-everywhere zero.
    bool is_zero() const;
    /// Flagged sorted: strictly decreasing values, ties merged, no zero cells.
    bool sorted() const { return sorted_; }

    double total_measure() const;
    double log_support_measure() const; // ln of the support measure (cells with value > 0)
    /// Pointwise value at x >= 0 (cells laid out from the origin in order).
    double value_at(double x) const;

private:
    std::vector<LogCell> cells_;
    bool sorted_ = false;

    friend StepFunction rearrange(const StepFunction&);
    friend StepFunction dilate_log(const StepFunction&, double);
    friend StepFunction scale_log(const StepFunction&, double);
    friend StepFunction pointwise_power_sum(std::span<const StepFunction>, double);
};

/// Non-increasing rearrangement f*: value-sorted, tie-merged, zero cells
/// dropped. Idempotent and equimeasurable with the input.
StepFunction rearrange(const StepFunction& f);

/// d_a f(x) = f(ax): every cell length is divided by a. a > 0.
StepFunction dilate(const StepFunction& f, double a);
/// d_{e^{log_a}} f, exact in log arithmetic.
StepFunction dilate_log(const StepFunction& f, double log_a);

/// α·f for α >= 0; α = 0 gives the zero function.
StepFunction scale(const StepFunction& f, double alpha);
/// e^{log_alpha}·f, exact in log arithmetic.
StepFunction scale_log(const StepFunction& f, double log_alpha);

/// (Σ f_i^p)^{1/p} on the common cell refinement. Supports must be
/// representable in linear scale.
StepFunction pointwise_power_sum(std::span<const StepFunction> fs, double p);

/// Distribution function μ(f >= t) for t > 0.
double measure_above(const StepFunction& f, double t);

} // namespace orlicz
