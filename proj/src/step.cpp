// Copyright (c) 2026 the orliczlab authors
// SPDX-License-Identifier: Apache-2.0

#include "orlicz/step.hpp"

#include <algorithm>
#include <cmath>

#include "orlicz/num.hpp"

namespace orlicz {

StepFunction StepFunction::from_cells(std::span<const std::pair<double, double>> cells) {
    std::vector<LogCell> out;
    out.reserve(cells.size());
    for (const auto& [len, val] : cells) {
        if (!(len > 0.0)) throw std::invalid_argument("step: cell lengths must be positive");
        if (val < 0.0) throw std::invalid_argument("step: cell values must be nonnegative");
        out.push_back({std::log(len), val == 0.0 ? num::neg_inf : std::log(val)});
    }
    return from_log_cells(std::move(out));
}

StepFunction StepFunction::from_cells(std::initializer_list<std::pair<double, double>> cells) {
    return from_cells(std::span<const std::pair<double, double>>(cells.begin(), cells.size()));
}

StepFunction StepFunction::from_log_cells(std::vector<LogCell> cells, bool sorted_hint) {
    for (const auto& c : cells) {
        if (!std::isfinite(c.log_len)) throw std::invalid_argument("step: bad log length");
        if (std::isnan(c.log_val) || c.log_val == num::pos_inf)
            throw std::invalid_argument("step: bad log value");
    }
    StepFunction f;
    f.cells_ = std::move(cells);
    if (sorted_hint) {
        for (std::size_t i = 0; i + 1 < f.cells_.size(); ++i)
            if (!(f.cells_[i].log_val > f.cells_[i + 1].log_val))
                throw std::invalid_argument("step: sorted_hint but values not strictly decreasing");
        f.sorted_ = true;
    }
    return f;
}

StepFunction StepFunction::indicator(double len, double value) {
    if (!(len > 0.0)) throw std::invalid_argument("step indicator: length must be positive");
    if (value < 0.0) throw std::invalid_argument("step indicator: value must be nonnegative");
    if (value == 0.0) return {};
    StepFunction f;
    f.cells_ = {{std::log(len), std::log(value)}};
    f.sorted_ = true;
    return f;
}

std::vector<std::pair<double, double>> StepFunction::cells() const {
    std::vector<std::pair<double, double>> out;
    out.reserve(cells_.size());
    for (const auto& c : cells_)
        out.emplace_back(std::exp(c.log_len), c.log_val == num::neg_inf ? 0.0 : std::exp(c.log_val));
    return out;
}

bool StepFunction::is_zero() const {
    return std::all_of(cells_.begin(), cells_.end(),
                       [](const LogCell& c) { return c.log_val == num::neg_inf; });
}

double StepFunction::total_measure() const {
    double t = 0.0;
    for (const auto& c : cells_) t += std::exp(c.log_len);
    return t;
}

double StepFunction::log_support_measure() const {
    double acc = num::neg_inf;
    for (const auto& c : cells_)
        if (c.log_val != num::neg_inf) acc = num::logaddexp(acc, c.log_len);
    return acc;
}

double StepFunction::value_at(double x) const {
    if (x < 0.0) throw std::domain_error("step value_at: negative x");
    double edge = 0.0;
    for (const auto& c : cells_) {
        edge += std::exp(c.log_len);
        if (x < edge) return c.log_val == num::neg_inf ? 0.0 : std::exp(c.log_val);
    }
    return 0.0;
}

StepFunction rearrange(const StepFunction& f) {
    if (f.sorted_) return f;
    std::vector<StepFunction::LogCell> cells;
    cells.reserve(f.cells_.size());
    for (const auto& c : f.cells_)
        if (c.log_val != num::neg_inf) cells.push_back(c);
    std::stable_sort(cells.begin(), cells.end(),
                     [](const auto& a, const auto& b) { return a.log_val > b.log_val; });
    // merge ties
    std::vector<StepFunction::LogCell> merged;
    for (const auto& c : cells) {
        if (!merged.empty() && merged.back().log_val == c.log_val)
            merged.back().log_len = num::logaddexp(merged.back().log_len, c.log_len);
        else
            merged.push_back(c);
    }
    StepFunction g;
    g.cells_ = std::move(merged);
    g.sorted_ = true;
    return g;
}

StepFunction dilate(const StepFunction& f, double a) {
    if (!(a > 0.0)) throw std::invalid_argument("dilate: factor must be positive");
    return dilate_log(f, std::log(a));
}

StepFunction dilate_log(const StepFunction& f, double log_a) {
    if (!std::isfinite(log_a)) throw std::invalid_argument("dilate_log: bad factor");
    StepFunction g = f;
    for (auto& c : g.cells_) c.log_len -= log_a;
    return g;
}

StepFunction scale(const StepFunction& f, double alpha) {
    if (alpha < 0.0) throw std::invalid_argument("scale: factor must be nonnegative");
    if (alpha == 0.0) return {};
    return scale_log(f, std::log(alpha));
}

StepFunction scale_log(const StepFunction& f, double log_alpha) {
    if (std::isnan(log_alpha) || log_alpha == num::pos_inf)
        throw std::invalid_argument("scale_log: bad factor");
    StepFunction g = f;
    for (auto& c : g.cells_)
        if (c.log_val != num::neg_inf) c.log_val += log_alpha;
    return g;
}

StepFunction pointwise_power_sum(std::span<const StepFunction> fs, double p) {
    if (fs.empty()) throw std::invalid_argument("pointwise_power_sum: empty list");
    if (!(p > 0.0)) throw std::invalid_argument("pointwise_power_sum: exponent must be positive");
    // common refinement of the linear breakpoints
    std::vector<double> edges{0.0};
    for (const auto& f : fs) {
        double x = 0.0;
        for (const auto& c : f.log_cells()) {
            x += std::exp(c.log_len);
            edges.push_back(x);
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end(),
                            [](double a, double b) { return b - a <= 1e-15 * std::max(1.0, b); }),
                edges.end());

    std::vector<StepFunction::LogCell> cells;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        const double mid = 0.5 * (edges[i] + edges[i + 1]);
        double vmax = 0.0;
        for (const auto& f : fs) vmax = std::max(vmax, f.value_at(mid));
        double v;
        if (vmax == 0.0) {
            v = 0.0;
        } else {
            double s = 0.0;
            for (const auto& f : fs) s += std::pow(f.value_at(mid) / vmax, p);
            v = vmax * std::pow(s, 1.0 / p);
        }
        cells.push_back({std::log(edges[i + 1] - edges[i]), v == 0.0 ? num::neg_inf : std::log(v)});
    }
    StepFunction g;
    g.cells_ = std::move(cells);
    return g;
}

double measure_above(const StepFunction& f, double t) {
    if (!(t > 0.0)) throw std::invalid_argument("measure_above: level must be positive");
    const double lt = std::log(t);
    double acc = 0.0;
    for (const auto& c : f.log_cells())
        if (c.log_val >= lt) acc += std::exp(c.log_len);
    return acc;
}

} // namespace orlicz
