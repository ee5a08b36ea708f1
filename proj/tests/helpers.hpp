// Copyright (c) 2026 the orliczlab authors
// SPDX-License-Identifier: Apache-2.0

// Shared seeded generators and independent oracles for the test suites. The
// oracles deliberately avoid the library's evaluation paths: they use plain
// linear-scale arithmetic, brute-force grids, and generic root finding.

#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "orlicz/num.hpp"
#include "orlicz/phi.hpp"
#include "orlicz/step.hpp"

namespace testing_helpers {

inline orlicz::PhiFunction random_phi(std::mt19937_64& rng, int max_interior_knots = 4,
                                      double slope_lo = 0.3, double slope_hi = 4.0) {
    std::uniform_real_distribution<double> slope(slope_lo, slope_hi);
    std::uniform_real_distribution<double> gap(0.3, 2.0);
    const int n = int(rng() % (max_interior_knots + 1));
    if (n == 0) return orlicz::PhiFunction::power(slope(rng));
    std::vector<double> us, vs;
    double u = -double(n) * 0.7, v = 0.3 * u;
    us.push_back(u);
    vs.push_back(v);
    for (int i = 0; i < n; ++i) {
        const double du = gap(rng);
        u += du;
        v += slope(rng) * du;
        us.push_back(u);
        vs.push_back(v);
    }
    return orlicz::PhiFunction::from_knots(us, vs, {slope(rng), 1.0}, {slope(rng), 1.0});
}

inline orlicz::StepFunction random_step(std::mt19937_64& rng, int max_cells = 8,
                                        double len_lo = 0.1, double len_hi = 3.0,
                                        double val_lo = 0.1, double val_hi = 5.0) {
    std::uniform_real_distribution<double> len(len_lo, len_hi), val(val_lo, val_hi);
    const int n = 1 + int(rng() % max_cells);
    std::vector<std::pair<double, double>> cells;
    for (int i = 0; i < n; ++i) cells.emplace_back(len(rng), val(rng));
    return orlicz::StepFunction::from_cells(
        std::span<const std::pair<double, double>>(cells));
}

/// Adaptive Simpson on [a, b]; plain double arithmetic.
inline double simpson(const std::function<double(double)>& f, double a, double b,
                      double tol = 1e-12, int depth = 48) {
    std::function<double(double, double, double, double, double, double, int)> rec =
        [&](double x0, double x2, double f0, double f1, double f2, double whole,
            int d) -> double {
        const double x1 = 0.5 * (x0 + x2);
        const double fl = f(0.5 * (x0 + x1)), fr = f(0.5 * (x1 + x2));
        const double L = (x1 - x0) / 6.0 * (f0 + 4 * fl + f1);
        const double R = (x2 - x1) / 6.0 * (f1 + 4 * fr + f2);
        if (d <= 0 || std::abs(L + R - whole) <= tol * std::max(1.0, std::abs(L + R)))
            return L + R + (L + R - whole) / 15.0;
        return rec(x0, x1, f0, fl, f1, L, d - 1) + rec(x1, x2, f1, fr, f2, R, d - 1);
    };
    const double f0 = f(a), f2 = f(b), f1 = f(0.5 * (a + b));
    return rec(a, b, f0, f1, f2, (b - a) / 6.0 * (f0 + 4 * f1 + f2), depth);
}

/// Luxemburg-norm oracle: quadrature of the modular on a per-cell basis plus
/// scalar bisection, touching only linear evaluations of F.
inline double luxemburg_oracle(const orlicz::PhiFunction& F,
                               const std::vector<std::pair<double, double>>& cells,
                               double tol = 1e-11) {
    auto modular = [&](double c) {
        double m = 0.0;
        for (const auto& [len, val] : cells)
            if (val > 0.0) m += len * F(val / c);
        return m;
    };
    double lo = 1e-9, hi = 1e9;
    while (modular(lo) < 1.0) lo *= 0.5;
    while (modular(hi) > 1.0) hi *= 2.0;
    for (int i = 0; i < 400 && (hi - lo) > tol * hi; ++i) {
        const double mid = std::sqrt(lo * hi);
        (modular(mid) > 1.0 ? lo : hi) = mid;
    }
    return std::sqrt(lo * hi);
}

/// ||f||_{T^p, T^q} by the change-of-variables formula
/// ((q/p)∫ f*(u)^q u^{q/p-1} du)^{1/q}, integrating each sorted cell with
/// adaptive Simpson (no closed-form power integrals).
inline double lorentz_oracle(double p, double q,
                             const std::vector<std::pair<double, double>>& sorted_cells,
                             double tol = 1e-12) {
    double total = 0.0, X = 0.0;
    for (const auto& [len, val] : sorted_cells) {
        const double X2 = X + len;
        total += simpson([&](double u) { return std::pow(val, q) * (q / p) * std::pow(u, q / p - 1.0); },
                         X, X2, tol) ;
        X = X2;
    }
    return std::pow(total, 1.0 / q);
}

/// Brute-force rearrangement by distribution-function inversion on a fine
/// value grid.
inline std::vector<std::pair<double, double>> rearrange_oracle(
    const std::vector<std::pair<double, double>>& cells) {
    std::vector<std::pair<double, double>> sorted = cells;
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.second > b.second; });
    std::vector<std::pair<double, double>> merged;
    for (const auto& c : sorted) {
        if (c.second == 0.0) continue;
        if (!merged.empty() && merged.back().second == c.second)
            merged.back().first += c.first;
        else
            merged.push_back(c);
    }
    return merged;
}

/// Chord scan over a dense u-grid; the plateau read of min/max mean slopes.
inline std::pair<double, double> window_scan_oracle(const orlicz::PhiFunction& F, double h,
                                                    double u_lo, double u_hi, int grid = 4000) {
    double lo = orlicz::num::pos_inf, hi = -orlicz::num::pos_inf;
    for (int i = 0; i <= grid; ++i) {
        const double u = u_lo + (u_hi - u_lo) * i / grid;
        const double m = (F.value_log(u + h) - F.value_log(u)) / h;
        lo = std::min(lo, m);
        hi = std::max(hi, m);
    }
    return {lo, hi};
}

} // namespace testing_helpers
