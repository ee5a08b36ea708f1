// Copyright (c) 2026 the orliczlab authors
// SPDX-License-Identifier: Apache-2.0

#include "orlicz/convexity.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "orlicz/hardy.hpp"
#include "orlicz/num.hpp"
#include "orlicz/parallel.hpp"

namespace orlicz {

std::string family_kind_name(FamilyKind k) {
    switch (k) {
        case FamilyKind::disjoint_translates: return "disjoint-translates";
        case FamilyKind::nested_staircase: return "nested-staircase";
        case FamilyKind::harmonic_comb: return "harmonic-comb";
        case FamilyKind::uniform_cells: return "uniform-cells";
    }
    return "?";
}

std::vector<StepFunction> make_family(FamilyKind kind, int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (std::uint64_t(n) + 1)));
    std::uniform_real_distribution<double> unif(0.2, 2.0);
    std::vector<StepFunction> fam;
    fam.reserve(static_cast<std::size_t>(n));
    switch (kind) {
        case FamilyKind::disjoint_translates: {
            // equal-length slots, one bump per member; zero-valued filler cells
            const double slot = unif(rng);
            const double h = unif(rng);
            for (int i = 0; i < n; ++i) {
                std::vector<std::pair<double, double>> cells;
                if (i > 0) cells.emplace_back(slot * i, 0.0);
                cells.emplace_back(slot, h);
                fam.push_back(
                    StepFunction::from_cells(std::span<const std::pair<double, double>>(cells)));
            }
            break;
        }
        case FamilyKind::nested_staircase: {
            double len = unif(rng);
            double val = unif(rng);
            for (int i = 0; i < n; ++i) {
                fam.push_back(StepFunction::indicator(len, val));
                len *= 1.9;
                val *= 0.55;
            }
            break;
        }
        case FamilyKind::harmonic_comb: {
            // cyclic shifts of the harmonic staircase over n unit cells; the
            // members are equimeasurable and their sum is H_n·χ_[0,n)
            for (int i = 0; i < n; ++i) {
                std::vector<std::pair<double, double>> cells;
                for (int j = 0; j < n; ++j) cells.emplace_back(1.0, 1.0 / double((j + i) % n + 1));
                fam.push_back(
                    StepFunction::from_cells(std::span<const std::pair<double, double>>(cells)));
            }
            break;
        }
        case FamilyKind::uniform_cells: {
            for (int i = 0; i < n; ++i) {
                std::vector<std::pair<double, double>> cells;
                const int m = 1 + int(rng() % 6);
                for (int j = 0; j < m; ++j) cells.emplace_back(unif(rng), unif(rng));
                fam.push_back(
                    StepFunction::from_cells(std::span<const std::pair<double, double>>(cells)));
            }
            break;
        }
    }
    return fam;
}

namespace {

struct ProbeTask {
    FamilyKind kind;
    int n;
};

ConvexityReport probe_impl(const PhiFunction& F, const PhiFunction& G, double e,
                           const FamilyConfig& cfg, bool convex) {
    if (!(e > 0.0)) throw std::invalid_argument("probe: exponent must be positive");
    if (cfg.sizes.empty() || cfg.kinds.empty())
        throw std::invalid_argument("probe: empty generator config");

    std::vector<ProbeTask> tasks;
    for (FamilyKind k : cfg.kinds)
        for (int n : cfg.sizes) tasks.push_back({k, n});

    std::vector<double> ratio(tasks.size());
    parallel_for(tasks.size(), cfg.threads, [&](std::size_t t) {
        const auto fam = make_family(tasks[t].kind, tasks[t].n, cfg.seed);
        const StepFunction mix = pointwise_power_sum(fam, e);
        const double num = orlicz_lorentz_norm(F, G, mix, cfg.tol).value();
        double den = 0.0;
        for (const auto& f : fam) den += std::pow(orlicz_lorentz_norm(F, G, f, cfg.tol).value(), e);
        den = std::pow(den, 1.0 / e);
        ratio[t] = den > 0.0 ? num / den : 0.0;
    });

    ConvexityReport rep;
    rep.exponent = e;
    rep.seed = cfg.seed;
    rep.family_count = static_cast<int>(tasks.size());
    rep.max_ratio = convex ? 0.0 : num::pos_inf;
    for (int n : cfg.sizes) {
        double extremal = convex ? 0.0 : num::pos_inf;
        for (std::size_t t = 0; t < tasks.size(); ++t) {
            if (tasks[t].n != n) continue;
            if (convex ? ratio[t] > extremal : ratio[t] < extremal) extremal = ratio[t];
        }
        rep.curve.emplace_back(n, extremal);
    }
    for (std::size_t t = 0; t < tasks.size(); ++t) {
        const bool better = convex ? ratio[t] > rep.max_ratio : ratio[t] < rep.max_ratio;
        if (better) {
            rep.max_ratio = ratio[t];
            rep.witness_family =
                family_kind_name(tasks[t].kind) + ":n=" + std::to_string(tasks[t].n);
        }
    }
    return rep;
}

} // namespace

ConvexityReport convexity_probe(const PhiFunction& F, const PhiFunction& G, double p,
                                const FamilyConfig& cfg) {
    return probe_impl(F, G, p, cfg, /*convex=*/true);
}

ConvexityReport concavity_probe(const PhiFunction& F, const PhiFunction& G, double q,
                                const FamilyConfig& cfg) {
    return probe_impl(F, G, q, cfg, /*convex=*/false);
}

// -- theorem 5.1 hypotheses -------------------------------------------------------

namespace {

std::vector<double> slope_seq(const PhiFunction& f) {
    std::vector<double> s{f.tail_lo().value()};
    for (std::size_t i = 0; i < f.segment_count(); ++i) s.push_back(f.segment_slope(i));
    s.push_back(f.tail_hi().value());
    return s;
}

/// Convexity of a φ-function in the linear domain: slope sequence
/// nondecreasing and at least 1 near the origin (then everywhere).
bool exact_convex(const PhiFunction& f) {
    const auto s = slope_seq(f);
    if (s.front() < 1.0 - 1e-12) return false;
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
        if (s[i] > s[i + 1] + 1e-12) return false;
    return true;
}

bool exact_concave(const PhiFunction& f) {
    const auto s = slope_seq(f);
    if (s.front() > 1.0 + 1e-12) return false;
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
        if (s[i] < s[i + 1] - 1e-12) return false;
    return true;
}

/// Greatest convex minorant (resp. least concave majorant when `concave`)
/// of a log-log graph; sentinel knots extend the tails so the chain respects
/// them.
PhiFunction monotone_hull(const PhiFunction& f, bool concave) {
    std::vector<double> us(f.knots_u().begin(), f.knots_u().end());
    std::vector<double> vs(f.knots_v().begin(), f.knots_v().end());
    const double reach = (us.back() - us.front()) + 10.0;
    us.insert(us.begin(), us.front() - reach);
    vs.insert(vs.begin(), vs.front() - reach * f.tail_lo().value());
    us.push_back(us.back() + reach);
    vs.push_back(vs.back() + reach * f.tail_hi().value());

    std::vector<double> hu, hv;
    auto bad_turn = [&](double ux, double vx) {
        const std::size_t m = hu.size();
        const double cross = (hu[m - 1] - hu[m - 2]) * (vx - hv[m - 2]) -
                             (hv[m - 1] - hv[m - 2]) * (ux - hu[m - 2]);
        return concave ? cross > 0.0 : cross < 0.0;
    };
    for (std::size_t i = 0; i < us.size(); ++i) {
        while (hu.size() >= 2 && bad_turn(us[i], vs[i])) {
            hu.pop_back();
            hv.pop_back();
        }
        hu.push_back(us[i]);
        hv.push_back(vs[i]);
    }
    return PhiFunction::from_knots(std::move(hu), std::move(hv), f.tail_lo(), f.tail_hi());
}

struct EquivCheck {
    bool holds;
    double constant;
    std::string offending;
};

EquivCheck equivalently_monotone(const PhiFunction& f, bool convex, double threshold) {
    const double t_lo = f.tail_lo().value(), t_hi = f.tail_hi().value();
    // the tails survive any bounded perturbation, so they must already fit
    if (convex && (t_lo > t_hi + 1e-12 || t_lo < 1.0 - 1e-12))
        return {false, num::pos_inf,
                "tail slopes " + std::to_string(t_lo) + " -> " + std::to_string(t_hi)};
    if (!convex && (t_lo < t_hi - 1e-12 || t_lo > 1.0 + 1e-12))
        return {false, num::pos_inf,
                "tail slopes " + std::to_string(t_lo) + " -> " + std::to_string(t_hi)};
    const PhiFunction hull = monotone_hull(f, /*concave=*/!convex);
    if (convex ? !exact_convex(hull) : !exact_concave(hull))
        return {false, num::pos_inf, "hull violates the slope-1 boundary"};
    const double c = equivalence_constant(f, hull);
    std::string off;
    if (c > threshold) {
        double worst = 0.0;
        for (std::size_t i = 0; i < f.knots_u().size(); ++i) {
            const double d = std::abs(f.knots_u()[i] - hull.arg_log(f.knots_v()[i]));
            if (d > worst) {
                worst = d;
                off = "u=" + std::to_string(f.knots_u()[i]);
            }
        }
    }
    return {c <= threshold, c, off};
}

} // namespace

Thm51Report theorem51_hypotheses(const PhiFunction& F, const PhiFunction& G, double p, double q,
                                 double equiv_threshold) {
    Thm51Report rep;
    rep.threshold = equiv_threshold;
    const PhiFunction inner = compose(tilde(G), inverse(tilde(F)));

    const auto ci = equivalently_monotone(compose(G, PhiFunction::power(1.0 / p)), /*convex=*/true,
                                          equiv_threshold);
    rep.i_outer_convex_equiv = ci.holds;
    rep.i_equiv_constant = ci.constant;
    rep.i_inner_concave = exact_concave(inner);
    rep.i_holds = rep.i_outer_convex_equiv && rep.i_inner_concave;
    if (!ci.holds) rep.offending = ci.offending;

    const auto cii = equivalently_monotone(compose(G, PhiFunction::power(1.0 / q)),
                                           /*convex=*/false, equiv_threshold);
    rep.ii_outer_concave_equiv = cii.holds;
    rep.ii_equiv_constant = cii.constant;
    rep.ii_inner_convex = exact_convex(inner);
    rep.ii_holds = rep.ii_outer_concave_equiv && rep.ii_inner_convex;
    if (rep.offending.empty() && !cii.holds) rep.offending = cii.offending;
    return rep;
}

// -- Hardy probe ------------------------------------------------------------------

namespace {

StepFunction random_sample(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unif(0.1, 3.0);
    std::vector<std::pair<double, double>> cells;
    const int m = 1 + int(rng() % 8);
    for (int j = 0; j < m; ++j) cells.emplace_back(unif(rng), unif(rng));
    return StepFunction::from_cells(std::span<const std::pair<double, double>>(cells));
}

} // namespace

HardyProbeReport hardy_inequality_probe(const PhiFunction& F, const PhiFunction& G, int samples,
                                        std::uint64_t seed, double tol, int threads) {
    HardyProbeReport rep;
    rep.samples = samples;
    rep.seed = seed;
    const auto analytic = boyd_analytic_bracket(F, G);
    rep.p_bracket = analytic.p;
    if (!(analytic.p.lo > 1.0)) {
        rep.refused = true;
        return rep;
    }

    std::vector<double> ratios(static_cast<std::size_t>(samples));
    std::vector<char> left_ok(static_cast<std::size_t>(samples), 1);
    parallel_for(static_cast<std::size_t>(samples), threads, [&](std::size_t i) {
        std::mt19937_64 rng(seed + 0x51ed2701ULL * (i + 1));
        const StepFunction f = random_sample(rng);
        const double nf = orlicz_lorentz_norm(F, G, f, tol).value();
        const auto env = hardy_star(f, 4);
        const double nstar = hardy_norm_exact(F, G, env, tol);
        ratios[i] = nstar / nf;
        left_ok[i] = nf <= nstar * (1.0 + 1e-9) ? 1 : 0;
    });
    rep.max_ratio = *std::max_element(ratios.begin(), ratios.end());
    rep.min_ratio = *std::min_element(ratios.begin(), ratios.end());
    rep.left_inequality_ok =
        std::all_of(left_ok.begin(), left_ok.end(), [](char c) { return c == 1; });
    return rep;
}

Thm53Report theorem53_necessity_probe(const PhiFunction& F, const PhiFunction& G, int samples,
                                      std::uint64_t seed) {
    Thm53Report rep;
    rep.samples = samples;
    rep.seed = seed;
    rep.copies_identity_exact = true;
    rep.ratio_min = num::pos_inf;
    rep.ratio_max = 0.0;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < samples; ++i) {
        const StepFunction f = random_sample(rng);
        // m disjoint equidistributed copies: their sum rearranges to each
        // value's measure scaled by m, which is exactly (d_{1/m} f)*
        const int m = 2 + int(rng() % 3);
        const StepFunction lhs = rearrange(dilate(f, 1.0 / m));
        StepFunction sum_sorted = rearrange(f);
        {
            std::vector<StepFunction::LogCell> cells(sum_sorted.log_cells().begin(),
                                                     sum_sorted.log_cells().end());
            for (auto& c : cells) c.log_len += std::log(double(m));
            sum_sorted = StepFunction::from_log_cells(std::move(cells), true);
        }
        const auto a = lhs.log_cells();
        const auto b = sum_sorted.log_cells();
        if (a.size() != b.size()) {
            rep.copies_identity_exact = false;
        } else {
            for (std::size_t j = 0; j < a.size(); ++j)
                if (std::abs(a[j].log_len - b[j].log_len) > 1e-12 ||
                    a[j].log_val != b[j].log_val)
                    rep.copies_identity_exact = false;
        }

        const double ng = orlicz_lorentz_norm(F, G, f).value();
        const double n1 = layer_cake_f1_norm(F, f);
        rep.ratio_min = std::min(rep.ratio_min, ng / n1);
        rep.ratio_max = std::max(rep.ratio_max, ng / n1);
    }
    return rep;
}

double layer_cake_f1_norm(const PhiFunction& F, const StepFunction& f) {
    const StepFunction fs = rearrange(f);
    if (fs.empty()) return 0.0;
    const PhiFunction tFinv = inverse(tilde(F));
    // ∫_0^∞ F̃^{-1}(μ(f >= t)) dt: μ is constant between consecutive sorted
    // values, so the integral is a finite sum over value gaps
    double total = 0.0;
    double log_x = num::neg_inf;
    std::vector<std::pair<double, double>> lvl;  // (cumulative measure log, value)
    for (const auto& c : fs.log_cells()) {
        log_x = num::logaddexp(log_x, c.log_len);
        lvl.emplace_back(log_x, std::exp(c.log_val));
    }
    for (std::size_t i = 0; i < lvl.size(); ++i) {
        const double v_here = lvl[i].second;
        const double v_next = (i + 1 < lvl.size()) ? lvl[i + 1].second : 0.0;
        total += std::exp(tFinv.value_log(lvl[i].first)) * (v_here - v_next);
    }
    return total;
}

} // namespace orlicz
