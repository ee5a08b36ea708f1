// Copyright (c) 2026 the orliczlab authors
// SPDX-License-Identifier: Apache-2.0

#include "orlicz/norms.hpp"

#include <algorithm>
#include <cmath>

#include "orlicz/num.hpp"

namespace orlicz {

namespace {

constexpr int kMaxBisection = 200;

double modular_log_cells(const PhiFunction& F, std::span<const StepFunction::LogCell> cells,
                         double log_c) {
    double m = 0.0;
    for (const auto& c : cells) {
        if (c.log_val == num::neg_inf) continue;
        m += std::exp(c.log_len + F.value_log(c.log_val - log_c));
    }
    return m;
}

NormResult bisect_norm(const PhiFunction& F, std::span<const StepFunction::LogCell> cells,
                       double lc_lo, double lc_hi, double tol) {
    // invariant: modular(lc_lo) >= 1 >= modular(lc_hi)
    NormResult r;
    int steps = 0;
    while (lc_hi - lc_lo > 0.5 * tol && steps < kMaxBisection) {
        const double mid = 0.5 * (lc_lo + lc_hi);
        if (modular_log_cells(F, cells, mid) > 1.0)
            lc_lo = mid;
        else
            lc_hi = mid;
        ++steps;
    }
    r.lo = std::exp(lc_lo);
    r.hi = std::exp(lc_hi);
    r.tol = (r.hi - r.lo) / std::max(r.hi, 1e-300);
    r.bisection_steps = steps;
    r.modular_at_mid = modular_log_cells(F, cells, 0.5 * (lc_lo + lc_hi));
    return r;
}

std::vector<StepFunction::LogCell> nonzero_cells(const StepFunction& f) {
    std::vector<StepFunction::LogCell> cells;
    cells.reserve(f.cell_count());
    for (const auto& c : f.log_cells())
        if (c.log_val != num::neg_inf) cells.push_back(c);
    return cells;
}

NormResult luxemburg_on_cells(const PhiFunction& F, std::vector<StepFunction::LogCell> cells,
                              double tol) {
    if (cells.empty()) return {};
    // analytic bracket: c_hi from the max value over the whole support,
    // c_lo from the best single cell; both make the modular hit 1 exactly
    // in the one-cell case.
    double log_tot = num::neg_inf, lv_max = num::neg_inf, lc_lo = num::neg_inf;
    for (const auto& c : cells) {
        log_tot = num::logaddexp(log_tot, c.log_len);
        lv_max = std::max(lv_max, c.log_val);
        lc_lo = std::max(lc_lo, c.log_val - F.arg_log(-c.log_len));
    }
    const double lc_hi = lv_max - F.arg_log(-log_tot);
    if (lc_hi <= lc_lo) {
        // single-cell (or degenerate) case: the bracket already collapsed
        NormResult r;
        r.lo = r.hi = std::exp(lc_lo);
        r.modular_at_mid = modular_log_cells(F, cells, lc_lo);
        return r;
    }
    return bisect_norm(F, cells, lc_lo, lc_hi, tol);
}

} // namespace

NormResult luxemburg_norm(const PhiFunction& F, const StepFunction& f, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("luxemburg_norm: tol must be positive");
    return luxemburg_on_cells(F, nonzero_cells(f), tol);
}

namespace {

/// Transplant the breakpoints of a sorted step function through
/// x ↦ G̃(F̃^{-1}(x)); returns cells for the G-Luxemburg norm.
std::vector<StepFunction::LogCell> transplant_cells(const PhiFunction& F, const PhiFunction& G,
                                                    const StepFunction& sorted_f) {
    const PhiFunction tF = tilde(F), tG = tilde(G);
    std::vector<StepFunction::LogCell> out;
    out.reserve(sorted_f.cell_count());
    double log_x = num::neg_inf;   // running breakpoint of f*
    double prev = num::neg_inf;    // transplanted previous breakpoint
    for (const auto& c : sorted_f.log_cells()) {
        log_x = num::logaddexp(log_x, c.log_len);
        const double b = tG.value_log(tF.arg_log(log_x));
        out.push_back({num::logsubexp(b, prev), c.log_val});
        prev = b;
    }
    return out;
}

} // namespace

NormResult orlicz_lorentz_norm(const PhiFunction& F, const PhiFunction& G, const StepFunction& f,
                               double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("orlicz_lorentz_norm: tol must be positive");
    const StepFunction fs = rearrange(f);
    if (fs.empty()) return {};
    return luxemburg_on_cells(G, transplant_cells(F, G, fs), tol);
}

double orlicz_lorentz_modular(const PhiFunction& F, const PhiFunction& G, const StepFunction& f,
                              double c) {
    if (!(c > 0.0)) throw std::invalid_argument("orlicz_lorentz_modular: c must be positive");
    const StepFunction fs = rearrange(f);
    if (fs.empty()) return 0.0;
    const auto cells = transplant_cells(F, G, fs);
    return modular_log_cells(G, cells, std::log(c));
}

namespace {

/// ∫_{u_lo}^{u_hi} exp(G(w(u) + shift)) du where w is the log-log graph of
/// F̃^{-1} evaluated along u, the exponent is piecewise affine. u_lo may be
/// -inf (the x→0 end), in which case convergence follows from positive chain
/// slopes.
double torchinsky_piece(const PhiFunction& G, const PhiFunction& tFinv, double shift, double u_lo,
                        double u_hi) {
    // breakpoints of the affine exponent: knots of tFinv plus preimages of
    // G's knots
    std::vector<double> cuts;
    for (double u : tFinv.knots_u())
        if (u > u_lo && u < u_hi) cuts.push_back(u);
    for (double gv : G.knots_u()) {
        const double u = tFinv.arg_log(gv - shift);
        if (u > u_lo && u < u_hi) cuts.push_back(u);
    }
    cuts.push_back(u_hi);
    if (u_lo != num::neg_inf) cuts.push_back(u_lo);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    double total = 0.0;
    double lo = u_lo;
    for (double hi : cuts) {
        if (!(hi > lo)) continue;
        const double probe = (lo == num::neg_inf) ? hi - 1.0 : 0.5 * (lo + hi);
        const double w_s = tFinv.slope_at(probe);
        const double g_s = G.slope_at(tFinv.value_log(probe) + shift);
        const double beta = g_s * w_s;
        const double alpha = G.value_log(tFinv.value_log(probe) + shift) - beta * probe;
        total += num::exp_affine_integral(alpha, beta, lo, hi);
        lo = hi;
    }
    return total;
}

double torchinsky_modular(const PhiFunction& G, const PhiFunction& tFinv,
                          const StepFunction& sorted_f, double log_c) {
    // ∫ G(F̃^{-1}(x) f*(x)/c) dx/x = Σ_i ∫_{u_{i-1}}^{u_i} e^{G-exponent} du
    double total = 0.0;
    double log_x = num::neg_inf, prev = num::neg_inf;
    for (const auto& c : sorted_f.log_cells()) {
        log_x = num::logaddexp(log_x, c.log_len);
        total += torchinsky_piece(G, tFinv, c.log_val - log_c, prev, log_x);
        prev = log_x;
    }
    return total;
}

} // namespace

NormResult torchinsky_norm(const PhiFunction& F, const PhiFunction& G, const StepFunction& f,
                           double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("torchinsky_norm: tol must be positive");
    const StepFunction fs = rearrange(f);
    if (fs.empty()) return {};
    const PhiFunction tFinv = inverse(tilde(F));

    auto modular = [&](double lc) { return torchinsky_modular(G, tFinv, fs, lc); };

    // initial guess from the characteristic identity, then expand to bracket
    double lc = tilde(F).arg_log(fs.log_support_measure()) + fs.log_cells().front().log_val -
                fs.log_support_measure() * 0.0;
    double lc_lo = lc, lc_hi = lc;
    int guard = 0;
    while (modular(lc_lo) < 1.0 && guard++ < 200) lc_lo -= 1.0;
    guard = 0;
    while (modular(lc_hi) > 1.0 && guard++ < 200) lc_hi += 1.0;
    if (guard >= 200) {
        NormResult r;
        r.divergent = DivergentEnd::at_infinity;
        r.lo = r.hi = num::pos_inf;
        return r;
    }

    NormResult r;
    int steps = 0;
    while (lc_hi - lc_lo > 0.5 * tol && steps < kMaxBisection) {
        const double mid = 0.5 * (lc_lo + lc_hi);
        if (modular(mid) > 1.0)
            lc_lo = mid;
        else
            lc_hi = mid;
        ++steps;
    }
    r.lo = std::exp(lc_lo);
    r.hi = std::exp(lc_hi);
    r.tol = (r.hi - r.lo) / std::max(r.hi, 1e-300);
    r.bisection_steps = steps;
    r.modular_at_mid = modular(0.5 * (lc_lo + lc_hi));
    return r;
}

// -- condition (J) ---------------------------------------------------------------

namespace {

/// ln W(e^u) for W = 1/H̃*^{-1}: equals -u - v_{H^{-1}}(-u).
struct CondJIntegrand {
    const PhiFunction& H;
    const PhiFunction& Hstar;

    double lnW(double u) const { return -u - H.arg_log(-u); }

    double exponent(double u, double log_c) const {
        return Hstar.value_log(lnW(u) - log_c) + u;
    }

    /// Modular over [u_lo, u_hi] by exact per-piece integration on a knot grid.
    double window_modular(double u_lo, double u_hi, double log_c,
                          std::vector<double>* piece_edges = nullptr) const {
        std::vector<double> cuts{u_lo, u_hi};
        for (double v : H.knots_v()) {  // knots of u ↦ lnW(u) sit at -v-knots of H
            const double u = -v;
            if (u > u_lo && u < u_hi) cuts.push_back(u);
        }
        for (double w : Hstar.knots_u()) {
            // lnW is strictly decreasing; solve lnW(u) - log_c = w by monotone bisection
            double a = u_lo, b = u_hi;
            if (lnW(a) - log_c < w || lnW(b) - log_c > w) continue;
            for (int i = 0; i < 120; ++i) {
                const double m = 0.5 * (a + b);
                if (lnW(m) - log_c > w)
                    a = m;
                else
                    b = m;
            }
            cuts.push_back(0.5 * (a + b));
        }
        std::sort(cuts.begin(), cuts.end());
        cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

        double total = 0.0;
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
            const double mid = 0.5 * (cuts[i] + cuts[i + 1]);
            const double e_mid = exponent(mid, log_c);
            const double e_lo = exponent(cuts[i], log_c);
            const double e_hi = exponent(cuts[i + 1], log_c);
            const double beta = (e_hi - e_lo) / (cuts[i + 1] - cuts[i]);
            const double alpha = e_mid - beta * mid;
            total += num::exp_affine_integral(alpha, beta, cuts[i], cuts[i + 1]);
            if (piece_edges) piece_edges->push_back(cuts[i + 1]);
        }
        return total;
    }
};

} // namespace

ConditionJResult condition_j_norm(const PhiFunction& H, std::pair<double, double> domain_cut,
                                  double tol) {
    if (!(domain_cut.first > 0.0) || !(domain_cut.second > domain_cut.first))
        throw std::invalid_argument("condition_j_norm: need 0 < cut.lo < cut.hi");
    const PhiFunction Hstar = complementary(H); // throws NotNFunction when a slope <= 1
    const CondJIntegrand I{H, Hstar};
    const double u_lo = std::log(domain_cut.first), u_hi = std::log(domain_cut.second);

    ConditionJResult res{};
    // Tail rate per log-unit, measured at c = e beyond the represented knots.
    // For exact power tails the integrand exponent is flat there, so the rate
    // is a positive constant and the full-line modular diverges at every c.
    const double far = std::max(std::abs(u_lo), std::abs(u_hi)) +
                       std::max(std::abs(H.knots_u().front()), std::abs(H.knots_u().back())) + 10.0;
    res.tail_rate_hi = std::exp(I.exponent(far, 1.0) - far) * std::exp(far) /* e^{e(u)-u}·e^u */;
    res.tail_rate_hi = std::exp(I.exponent(far, 1.0));
    res.tail_rate_lo = std::exp(I.exponent(-far, 1.0));

    if (!H.truncated_pattern()) {
        res.verdict = ConditionJResult::Verdict::divergent;
        res.end = DivergentEnd::both;
        return res;
    }

    // Truncated pattern: decide by the trend of per-segment contributions
    // toward each end of the window, extrapolating a geometric tail.
    auto contributions = [&](double log_c, bool toward_hi) {
        std::vector<double> out;
        const int nseg = 8;
        const double width = (u_hi - u_lo) / 4.0;
        for (int j = 0; j < nseg; ++j) {
            const double step = width / nseg;
            double a = toward_hi ? (u_hi - width + j * step) : (u_lo + width - (j + 1) * step);
            out.push_back(I.window_modular(a, a + step, log_c));
        }
        return out;
    };
    auto trend_ratio = [&](const std::vector<double>& c) {
        double worst = 0.0;
        for (std::size_t i = 1; i < c.size(); ++i) {
            if (c[i - 1] <= 0.0) return 0.0;
            worst = std::max(worst, c[i] / c[i - 1]);
        }
        return worst;
    };

    auto modular_with_tail = [&](double log_c, double* rho_out) -> double {
        const double base = I.window_modular(u_lo, u_hi, log_c);
        const auto chi = contributions(log_c, true);
        const auto clo = contributions(log_c, false);
        const double rho = std::max(trend_ratio(chi), trend_ratio(clo));
        if (rho_out) *rho_out = rho;
        if (rho >= 0.97) return num::pos_inf;
        return base + (chi.back() + clo.back()) * rho / (1.0 - rho);
    };

    double rho = 1.0;
    (void)modular_with_tail(0.0, &rho);
    if (rho >= 0.97) {
        res.verdict = rho > 1.0 + 1e-9 ? ConditionJResult::Verdict::divergent
                                       : ConditionJResult::Verdict::indeterminate;
        res.end = DivergentEnd::both;
        return res;
    }

    // bisection on ln c; modular strictly decreasing
    double lc_lo = 0.0, lc_hi = 1.0;
    int guard = 0;
    while (modular_with_tail(lc_lo, nullptr) < 1.0 && guard++ < 200) lc_lo -= 1.0;
    guard = 0;
    while (modular_with_tail(lc_hi, nullptr) > 1.0 && guard++ < 200) lc_hi += 1.0;
    NormResult n;
    int steps = 0;
    while (lc_hi - lc_lo > 0.5 * tol && steps < kMaxBisection) {
        const double mid = 0.5 * (lc_lo + lc_hi);
        if (modular_with_tail(mid, nullptr) > 1.0)
            lc_lo = mid;
        else
            lc_hi = mid;
        ++steps;
    }
    n.lo = std::exp(lc_lo);
    n.hi = std::exp(lc_hi);
    n.tol = (n.hi - n.lo) / std::max(n.hi, 1e-300);
    n.bisection_steps = steps;
    n.modular_at_mid = modular_with_tail(0.5 * (lc_lo + lc_hi), nullptr);
    res.verdict = ConditionJResult::Verdict::finite;
    res.norm = n;
    return res;
}

} // namespace orlicz
