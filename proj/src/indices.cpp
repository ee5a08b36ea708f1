// Copyright (c) 2026 the orliczlab authors
// SPDX-License-Identifier: Apache-2.0

#include "orlicz/indices.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "orlicz/num.hpp"
#include "orlicz/parallel.hpp"

namespace orlicz {

namespace {

std::string mo_tag(const MatuszewskaIndices& mo) {
    return mo.method == MatuszewskaIndices::Method::exact_from_slopes ? "exact-from-slopes"
                                                                      : "window-scan";
}

} // namespace

ZippinReport zippin_indices(const PhiFunction& F, const PhiFunction& G) {
    (void)G;  // the Zippin indices of L_{F,G} depend on F alone
    const auto mo = mo_indices(F);
    ZippinReport rep;
    rep.p_z = {mo.p_m, mo.p_m, "p_m(F), " + mo_tag(mo), "p_m(F), " + mo_tag(mo), std::nullopt};
    rep.q_z = {mo.q_m, mo.q_m, "q_m(F), " + mo_tag(mo), "q_m(F), " + mo_tag(mo), std::nullopt};

    // χ-dilation cross-check: ||χ_A||_{F,G} = F̃^{-1}(μ(A)), so the ratio
    // exponent is a chord slope of F̃^{-1}; all reads must land in [p_m, q_m]
    const PhiFunction tFinv = inverse(tilde(F));
    rep.chi_read_lo = num::pos_inf;
    rep.chi_read_hi = 0.0;
    for (int j = -12; j <= 12; j += 3) {
        const double lmu = j * std::log(10.0) / 3.0;
        for (double la : {std::log(2.0), 3.0 * std::log(2.0), 10.0 * std::log(2.0)}) {
            const double gain = tFinv.value_log(lmu + la) - tFinv.value_log(lmu);
            const double read = la / gain;
            rep.chi_read_lo = std::min(rep.chi_read_lo, read);
            rep.chi_read_hi = std::max(rep.chi_read_hi, read);
        }
    }
    const double slack = 1e-9;
    rep.consistent = rep.chi_read_lo >= mo.p_m - slack &&
                     (mo.q_m == num::pos_inf || rep.chi_read_hi <= mo.q_m + slack);
    return rep;
}

BoydAnalytic boyd_analytic_bracket(const PhiFunction& F, const PhiFunction& G) {
    const auto moF = mo_indices(F);
    const auto moG = mo_indices(G);
    const auto moFG = mo_indices(compose(F, inverse(G)));

    auto mul = [](double x, double y) {
        if (x == 0.0 && y == num::pos_inf) return 0.0;  // conservative corner
        if (y == 0.0 && x == num::pos_inf) return 0.0;
        return x * y;
    };

    BoydAnalytic out;
    out.p.lo = mul(moFG.p_m, moG.p_m);
    out.p.hi = moF.p_m;
    out.p.lo_provenance = "p_m(F∘G⁻¹)·p_m(G), " + mo_tag(moFG);
    out.p.hi_provenance = "p_m(F), " + mo_tag(moF);
    out.q.lo = moF.q_m;
    out.q.hi = mul(moFG.q_m, moG.q_m);
    out.q.lo_provenance = "q_m(F), " + mo_tag(moF);
    out.q.hi_provenance = "q_m(F∘G⁻¹)·q_m(G), " + mo_tag(moFG);
    out.p_weak_lo = moG.q_m == num::pos_inf ? 0.0 : moF.p_m * moG.p_m / moG.q_m;
    out.q_weak_hi = mul(moF.q_m, moG.q_m) / moG.p_m;
    return out;
}

std::vector<DictionaryEntry> default_dictionary(const PhiFunction& F, const PhiFunction& G,
                                                const CounterexampleSpec* ce) {
    (void)F;
    (void)G;
    std::vector<DictionaryEntry> dict;
    for (int e : {-8, -4, 0, 4, 8})
        dict.push_back({"chi:2^" + std::to_string(e),
                        StepFunction::indicator(std::exp2(double(e)))});
    // geometric staircases
    for (double r : {0.5, 0.25}) {
        std::vector<std::pair<double, double>> cells;
        double len = 1.0, val = 1.0;
        for (int j = 0; j < 7; ++j) {
            cells.emplace_back(len, val);
            len *= 4.0;
            val *= r;
        }
        dict.push_back({"stair:r=" + std::to_string(r),
                        StepFunction::from_cells(std::span<const std::pair<double, double>>(cells))});
    }
    if (ce) {
        for (int k = 0; k < ce->blocks; ++k) {
            const bool has_b = ce->variant == CounterexampleSpec::Variant::thm41;
            for (int side = 0; side < (has_b ? 2 : 1); ++side) {
                const auto blk = block_params(*ce, k, side == 1);
                const double th = std::min(blk.q / blk.p, 1.0);
                auto [f, g] = lemma43_witnesses(blk, th);
                const std::string tag =
                    (side == 1 ? "b" : "a") + std::string("-block:") + std::to_string(k);
                dict.push_back({"witness-f:" + tag, std::move(f)});
                dict.push_back({"witness-g:" + tag + ":theta=" + std::to_string(th), std::move(g)});
            }
        }
    }
    return dict;
}

std::vector<double> default_a_grid() {
    std::vector<double> grid;
    for (int k = 40; k >= 1; --k) grid.push_back(std::exp2(-k / 4.0));
    for (int k = 0; k <= 40; ++k) grid.push_back(std::exp2(k / 4.0));
    return grid;
}

namespace {

DilationProfile profile_impl(const PhiFunction& F, const PhiFunction& G,
                             const std::vector<DictionaryEntry>& dictionary,
                             const std::vector<double>& a_grid, double tol, int threads) {
    if (dictionary.empty()) throw std::invalid_argument("dilation_profile: empty dictionary");
    for (double a : a_grid)
        if (!(a > 0.0)) throw std::invalid_argument("dilation_profile: grid values must be > 0");

    const std::size_t na = a_grid.size(), nw = dictionary.size();
    std::vector<double> base(nw);
    parallel_for(nw, threads, [&](std::size_t w) {
        base[w] = orlicz_lorentz_norm(F, G, dictionary[w].f, tol).value();
    });

    std::vector<double> ratios(na * nw, 0.0);
    parallel_for(na * nw, threads, [&](std::size_t i) {
        const std::size_t ia = i / nw, w = i % nw;
        if (base[w] <= 0.0) return;  // skip degenerate witnesses
        const auto r = orlicz_lorentz_norm(F, G, dilate(dictionary[w].f, a_grid[ia]), tol);
        ratios[i] = r.value() / base[w];
    });

    DilationProfile prof;
    prof.samples.reserve(na);
    for (std::size_t ia = 0; ia < na; ++ia) {
        DilationSample s;
        s.a = a_grid[ia];
        for (std::size_t w = 0; w < nw; ++w) {
            const double r = ratios[ia * nw + w];
            if (r > s.ratio || s.witness < 0) {
                if (s.witness < 0 || r > s.ratio) {
                    s.ratio = r;
                    s.witness = static_cast<int>(w);
                }
            }
        }
        prof.samples.push_back(s);
    }
    prof.witness_names.reserve(nw);
    for (const auto& d : dictionary) prof.witness_names.push_back(d.name);
    return prof;
}

} // namespace

DilationProfile dilation_profile(const PhiFunction& F, const PhiFunction& G,
                                 const std::vector<DictionaryEntry>& dictionary,
                                 const std::vector<double>& a_grid, double tol, int threads) {
    return profile_impl(F, G, dictionary, a_grid, tol, threads);
}

DilationProfile dilation_profile_serial(const PhiFunction& F, const PhiFunction& G,
                                        const std::vector<DictionaryEntry>& dictionary,
                                        const std::vector<double>& a_grid, double tol) {
    return profile_impl(F, G, dictionary, a_grid, tol, 1);
}

BoydEmpirical boyd_empirical_bounds(const DilationProfile& profile, const BoydAnalytic& analytic) {
    bool saw_lo = false, saw_hi = false;
    BoydEmpirical out;
    out.p_upper_empirical = num::pos_inf;
    out.q_lower_empirical = 0.0;
    std::string p_wit, q_wit;
    for (const auto& s : profile.samples) {
        if (s.a < 1.0) {
            saw_lo = true;
            if (s.ratio > 1.0 + 1e-12) {
                const double r = -std::log(s.a) / std::log(s.ratio);
                if (r < out.p_upper_empirical) {
                    out.p_upper_empirical = r;
                    p_wit = profile.witness_names.at(static_cast<std::size_t>(s.witness)) +
                            " @ a=" + std::to_string(s.a);
                }
            }
        } else if (s.a > 1.0) {
            saw_hi = true;
            if (s.ratio < 1.0 - 1e-12) {
                const double r = -std::log(s.a) / std::log(s.ratio);
                if (r > out.q_lower_empirical) {
                    out.q_lower_empirical = r;
                    q_wit = profile.witness_names.at(static_cast<std::size_t>(s.witness)) +
                            " @ a=" + std::to_string(s.a);
                }
            }
        }
    }
    if (!saw_lo || !saw_hi)
        throw std::invalid_argument("boyd_empirical_bounds: grid must cover both sides of a = 1");

    const double slack = 1e-9;
    if (out.p_upper_empirical < analytic.p.lo - slack ||
        out.q_lower_empirical > analytic.q.hi + slack)
        throw std::logic_error("boyd_empirical_bounds: certified witness contradicts the "
                               "analytic sandwich");

    out.p = analytic.p;
    if (out.p_upper_empirical < out.p.hi) {
        out.p.hi = out.p_upper_empirical;
        out.p.hi_provenance = "witness dilation ratio";
        out.p.witness = p_wit;
    }
    out.q = analytic.q;
    if (out.q_lower_empirical > out.q.lo) {
        out.q.lo = out.q_lower_empirical;
        out.q.lo_provenance = "witness dilation ratio";
        out.q.witness = q_wit;
    }
    return out;
}

} // namespace orlicz
