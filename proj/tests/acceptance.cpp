// Copyright (c) 2026 the orliczlab authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance suite: one line per criterion, every tolerance pinned in code.
// Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "orlicz/convexity.hpp"
#include "orlicz/hardy.hpp"
#include "orlicz/indices.hpp"
#include "orlicz/norms.hpp"
#include "orlicz/num.hpp"

#include "helpers.hpp"

using namespace orlicz;
using testing_helpers::random_phi;
using testing_helpers::random_step;

namespace {

int g_failures = 0;

struct Criterion {
    const char* name;
    std::function<bool(std::string&)> run;
    double time_limit_s;
};

void run_criterion(int number, const Criterion& c) {
    std::string detail;
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = c.run(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.time_limit_s) {
        ok = false;
        detail += " [over time limit]";
    }
    std::printf("%s  %2d. %-34s %7.2fs  %s\n", ok ? "PASS" : "FAIL", number, c.name, secs,
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

bool within(double got, double want, double tol) {
    return std::abs(got - want) <= tol * std::max(1.0, std::abs(want));
}

char buf[256];
std::string fmt(const char* f, ...) {
    va_list ap;
    va_start(ap, f);
    vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

// ---- criterion bodies -----------------------------------------------------------

bool golden_ratio(std::string& detail) {
    const double a = solve_block_scale(1.0, 1.0, 2);
    const double want = (1.0 + std::sqrt(5.0)) / 2.0;
    detail = fmt("a = %.15f", a);
    return std::abs(a - want) <= 1e-12;
}

bool lemma43_single_block(std::string& detail) {
    // (p, q) = (1, 2), both single blocks with count 5 at θ ∈ {0, 1/4, 1/2}.
    // On the q-first stretch the dilation identity reads exactly
    // ||d_{a^{-θ}} f|| = a^{(q/p)θ}||f|| in the original (p, q) labels.
    const auto built = build_theorem41_phi(1.0, 2.0, 1, "const:5");
    double worst_norm = 0.0, worst_mod = 0.0, worst_ratio = 0.0;
    for (bool b_side : {false, true}) {
        const BlockParams blk = block_params(built.spec, 0, b_side);
        for (double theta : {0.0, 0.25, 0.5}) {
            if (theta > std::min(blk.q / blk.p, 1.0)) continue;
            auto [f, g] = lemma43_witnesses(blk, theta);
            const auto rep = verify_lemma43(built.phi, blk, f, g, theta, 1e-8);
            worst_norm = std::max({worst_norm, std::abs(rep.norm_f - 1.0),
                                   std::abs(rep.norm_g - 1.0)});
            worst_mod = std::max({worst_mod, std::abs(rep.modular_f_at_1 - 1.0),
                                  std::abs(rep.modular_g_at_1 - 1.0)});
            worst_ratio =
                std::max(worst_ratio, std::abs(rep.dilation_ratio / rep.expected_ratio - 1.0));
            if (b_side) {
                // the paper-literal exponent: ratio = a^{(q/p)θ} with (p,q) = (1,2)
                const double literal = std::pow(blk.a, 2.0 * theta);
                worst_ratio = std::max(worst_ratio, std::abs(rep.dilation_ratio / literal - 1.0));
            }
        }
    }
    detail = fmt("norm err %.2e, modular err %.2e, ratio err %.2e", worst_norm, worst_mod,
                 worst_ratio);
    return worst_norm <= 1e-10 && worst_mod <= 1e-12 && worst_ratio <= 1e-9;
}

struct GapReadings {
    double p_upper, q_lower;
};

GapReadings gap_at(int K) {
    const auto built = build_theorem41_phi(1.0, 2.0, K);
    const auto F = PhiFunction::power(1.0);
    const auto analytic = boyd_analytic_bracket(F, built.phi);
    const auto prof = dilation_profile(F, built.phi, default_dictionary(F, built.phi, &built.spec),
                                       default_a_grid());
    const auto emp = boyd_empirical_bounds(prof, analytic);
    return {emp.p_upper_empirical, emp.q_lower_empirical};
}

bool boyd_zippin_gap(std::string& detail) {
    const auto built = build_theorem41_phi(1.0, 2.0, 6);
    const auto F = PhiFunction::power(1.0);
    const auto z = zippin_indices(F, built.phi);
    const auto analytic = boyd_analytic_bracket(F, built.phi);
    const auto g6 = gap_at(6);

    bool ok = z.p_z.contains(1.0, 1e-12) && z.p_z.width() <= 0.05;
    ok = ok && g6.p_upper <= 0.55;
    // Prop 3.2(iii) pins q_z(L_{1,G}) = q_m(T^1) = 1; the value 2 lives in the
    // Theorem-3.1 q-bracket, which the empirical lower bound tightens
    ok = ok && analytic.q.contains(2.0, 1e-9);
    ok = ok && g6.q_lower >= 1.8;
    const double gap = z.p_z.lo - g6.p_upper;
    ok = ok && gap >= 0.4;

    const auto g2 = gap_at(2), g4 = gap_at(4);
    const double slack = 1e-3;
    ok = ok && g2.p_upper >= g4.p_upper - slack && g4.p_upper >= g6.p_upper - slack;
    ok = ok && g2.q_lower <= g4.q_lower + slack && g4.q_lower <= g6.q_lower + slack;

    detail = fmt("p_z=%.3f, p-upper K=2,4,6: %.4f %.4f %.4f, q-lower: %.4f %.4f %.4f, gap %.3f",
                 z.p_z.lo, g2.p_upper, g4.p_upper, g6.p_upper, g2.q_lower, g4.q_lower, g6.q_lower,
                 gap);
    return ok;
}

bool orlicz_collapse(std::string& detail) {
    std::mt19937_64 rng(2024);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const auto F = random_phi(rng);
        const auto f = random_step(rng);
        const double a = orlicz_lorentz_norm(F, F, f).value();
        const double b = luxemburg_norm(F, f).value();
        worst = std::max(worst, std::abs(a / b - 1.0));
    }
    detail = fmt("worst rel err %.2e over 100 pairs", worst);
    return worst <= 1e-10;
}

bool characteristic_identity(std::string& detail) {
    std::mt19937_64 rng(2025);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const auto F = random_phi(rng);
        const auto G = random_phi(rng);
        const auto tFi = inverse(tilde(F));
        for (int d = -6; d <= 6; ++d) {
            const double s = std::pow(10.0, d);
            const double got = orlicz_lorentz_norm(F, G, StepFunction::indicator(s)).value();
            worst = std::max(worst, std::abs(got / tFi(s) - 1.0));
        }
    }
    detail = fmt("worst rel err %.2e over 20 pairs x 13 decades", worst);
    return worst <= 1e-12;
}

bool lorentz_closed_form(std::string& detail) {
    std::mt19937_64 rng(2026);
    double worst = 0.0;
    for (auto [p, q] : {std::pair{2.0, 1.0}, {1.0, 2.0}, {3.0, 1.5}}) {
        const auto F = PhiFunction::power(p), G = PhiFunction::power(q);
        for (int i = 0; i < 50; ++i) {
            const auto f = random_step(rng);
            const double got = orlicz_lorentz_norm(F, G, f).value();
            const double want = testing_helpers::lorentz_oracle(p, q, rearrange(f).cells());
            worst = std::max(worst, std::abs(got / want - 1.0));
        }
    }
    detail = fmt("worst rel err %.2e vs quadrature oracle", worst);
    return worst <= 1e-8;
}

bool theorem31_sandwich(std::string& detail) {
    std::mt19937_64 rng(2027);
    const auto grid = default_a_grid();
    double closest_p = num::pos_inf, closest_q = num::pos_inf;
    for (int i = 0; i < 50; ++i) {
        const auto F = random_phi(rng, 3);
        const auto G = random_phi(rng, 3);
        const auto analytic = boyd_analytic_bracket(F, G);
        const auto prof = dilation_profile(F, G, default_dictionary(F, G), grid);
        BoydEmpirical emp;
        try {
            emp = boyd_empirical_bounds(prof, analytic);  // throws on contradiction
        } catch (const std::logic_error&) {
            detail = fmt("contradiction at pair %d", i);
            return false;
        }
        if (emp.p_upper_empirical < analytic.p.lo - 1e-9 ||
            emp.q_lower_empirical > analytic.q.hi + 1e-9) {
            detail = fmt("bounds escaped the bracket at pair %d", i);
            return false;
        }
        closest_p = std::min(closest_p, emp.p_upper_empirical - analytic.p.lo);
        closest_q = std::min(closest_q, analytic.q.hi - emp.q_lower_empirical);
    }
    detail = fmt("50 pairs inside; min margins p %.3e, q %.3e", closest_p, closest_q);
    return true;
}

bool hardy_L2(std::string& detail) {
    const auto F = PhiFunction::power(2.0);
    const auto rep = hardy_inequality_probe(F, F, 200, 424242);
    if (rep.refused || !rep.left_inequality_ok) {
        detail = "probe refused or left inequality failed";
        return false;
    }
    const auto env = hardy_star(StepFunction::indicator(1.0), 4);
    const double chi_ratio = hardy_norm_exact(F, F, env) /
                             orlicz_lorentz_norm(F, F, StepFunction::indicator(1.0)).value();
    detail = fmt("max ratio %.8f (limit 2), chi ratio %.12f", rep.max_ratio, chi_ratio);
    return rep.max_ratio <= 2.0 + 1e-6 && std::abs(chi_ratio - std::sqrt(2.0)) <= 1e-10;
}

bool torchinsky_chi(std::string& detail) {
    double worst = 0.0, worst_slope = 0.0;
    for (auto [p, q] : {std::pair{1.0, 1.0}, {2.0, 1.0}, {1.0, 2.0}}) {
        const auto F = PhiFunction::power(p), G = PhiFunction::power(q);
        // formula check over the s-grid, plus the regression read of the
        // profile slope against 1/p_m(F)
        double sum_x = 0.0, sum_y = 0.0, sum_xx = 0.0, sum_xy = 0.0;
        int n = 0;
        for (int d = -6; d <= 6; ++d) {
            const double s = std::pow(10.0, d);
            const double got = torchinsky_norm(F, G, StepFunction::indicator(s)).value();
            const double want = std::pow(p / q, 1.0 / q) * std::pow(s, 1.0 / p);
            worst = std::max(worst, std::abs(got / want - 1.0));
            const double x = std::log(s), y = std::log(got);
            sum_x += x;
            sum_y += y;
            sum_xx += x * x;
            sum_xy += x * y;
            ++n;
        }
        const double slope = (n * sum_xy - sum_x * sum_y) / (n * sum_xx - sum_x * sum_x);
        worst_slope = std::max(worst_slope, std::abs(slope - 1.0 / p));
    }
    detail = fmt("worst formula err %.2e, worst regression slope err %.2e", worst, worst_slope);
    return worst <= 1e-10 && worst_slope <= 0.02;
}

bool non_convexity_trend(std::string& detail) {
    FamilyConfig cfg;
    cfg.seed = 777;
    cfg.sizes = {4, 256};
    cfg.kinds = {FamilyKind::harmonic_comb};
    const auto rep = convexity_probe(PhiFunction::power(1.0), PhiFunction::power(2.0), 1.0, cfg);
    const double r4 = rep.curve[0].second, r256 = rep.curve[1].second;
    detail = fmt("ratio n=4: %.4f, n=256: %.4f, growth %.3f", r4, r256, r256 / r4);
    return r256 / r4 >= 1.3;
}

bool property_suites(std::string& detail) {
    std::mt19937_64 rng(2028);
    double worst_hom = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const auto F = random_phi(rng, 2);
        const auto G = random_phi(rng, 2);
        const auto f = random_step(rng, 5);
        const double alpha = 0.25 + (rng() % 1000) / 100.0;
        const double n0 = orlicz_lorentz_norm(F, G, f).value();
        // homogeneity
        worst_hom = std::max(worst_hom, std::abs(orlicz_lorentz_norm(F, G, scale(f, alpha)).value() /
                                                     (alpha * n0) -
                                                 1.0));
        // monotonicity
        auto cells = f.cells();
        for (auto& c : cells) c.second *= 1.25;
        const auto g =
            StepFunction::from_cells(std::span<const std::pair<double, double>>(cells));
        if (orlicz_lorentz_norm(F, G, g).value() < n0 * (1.0 - 1e-11)) {
            detail = fmt("monotonicity failed at case %d", i);
            return false;
        }
        // rearrangement invariance (exact: both paths sort first)
        if (orlicz_lorentz_norm(F, G, rearrange(f)).value() != n0) {
            detail = fmt("rearrangement invariance failed at case %d", i);
            return false;
        }
        // involutions, exact on representations
        const auto Ftt = tilde(tilde(F));
        const auto Fii = inverse(inverse(F));
        if (Ftt.knots_u().size() != F.knots_u().size() ||
            Fii.knots_u().size() != F.knots_u().size()) {
            detail = "involution changed the knot count";
            return false;
        }
        for (std::size_t k = 0; k < F.knots_u().size(); ++k)
            if (Ftt.knots_u()[k] != F.knots_u()[k] || Fii.knots_v()[k] != F.knots_v()[k]) {
                detail = "involution moved a knot";
                return false;
            }
        // (d_a f)* = d_a (f*), exact cells
        const double a = std::exp((double(rng() % 2000) - 1000.0) / 250.0);
        const auto lhs = rearrange(dilate(f, a));
        const auto rhs = dilate(rearrange(f), a);
        if (lhs.cell_count() != rhs.cell_count()) {
            detail = "dilation/rearrangement exchange failed";
            return false;
        }
        for (std::size_t k = 0; k < lhs.cell_count(); ++k)
            if (lhs.log_cells()[k].log_len != rhs.log_cells()[k].log_len ||
                lhs.log_cells()[k].log_val != rhs.log_cells()[k].log_val) {
                detail = "dilation/rearrangement exchange inexact";
                return false;
            }
        // dilatory/Δ2 predicates against the definitional chord bounds
        const auto mo = mo_indices(F);
        double C_p = 0.0, C_q = 0.0;
        for (std::size_t s = 0; s < F.segment_count(); ++s) {
            const double len = F.knots_u()[s + 1] - F.knots_u()[s];
            C_p += std::max(0.0, mo.p_m - F.segment_slope(s)) * len;
            C_q += std::max(0.0, F.segment_slope(s) - mo.q_m) * len;
        }
        const double h = 30.0;
        const auto [lo_mean, hi_mean] = testing_helpers::window_scan_oracle(
            F, h, F.knots_u().front() - h - 3.0, F.knots_u().back() + 3.0, 600);
        if (lo_mean * h < mo.p_m * h - C_p - 1e-7 || hi_mean * h > mo.q_m * h + C_q + 1e-7 ||
            !(lo_mean > 0.0) || is_dilatory(F) != Tristate::yes ||
            satisfies_delta2(F) != Tristate::yes) {
            detail = fmt("predicate agreement failed at case %d", i);
            return false;
        }
    }
    detail = fmt("1000 cases per suite, worst homogeneity err %.2e", worst_hom);
    return worst_hom <= 1e-12;
}

} // namespace

int main() {
    std::printf("acceptance suite (tolerances pinned in code)\n");
    int n = 1;
    run_criterion(n++, {"golden-ratio block solve", golden_ratio, 1.0});
    run_criterion(n++, {"lemma 4.3 identities (M=5)", lemma43_single_block, 10.0});
    run_criterion(n++, {"boyd-zippin gap (K=6)", boyd_zippin_gap, 300.0});
    run_criterion(n++, {"orlicz collapse (100 pairs)", orlicz_collapse, 30.0});
    run_criterion(n++, {"characteristic identity", characteristic_identity, 10.0});
    run_criterion(n++, {"lorentz closed form", lorentz_closed_form, 60.0});
    run_criterion(n++, {"theorem 3.1 sandwich (50 pairs)", theorem31_sandwich, 120.0});
    run_criterion(n++, {"hardy constant in L2", hardy_L2, 120.0});
    run_criterion(n++, {"torchinsky chi formula", torchinsky_chi, 60.0});
    run_criterion(n++, {"non-1-convexity trend of L_{1,2}", non_convexity_trend, 60.0});
    run_criterion(n++, {"property suites (1000 cases)", property_suites, 120.0});
    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
