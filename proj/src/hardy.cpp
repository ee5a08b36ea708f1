// Copyright (c) 2026 the orliczlab authors
// SPDX-License-Identifier: Apache-2.0

#include "orlicz/hardy.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "orlicz/num.hpp"

namespace orlicz {

namespace {

struct SortedCells {
    std::vector<double> X;  // breakpoints, X[0] = 0
    std::vector<double> w;  // values per cell
};

SortedCells linear_sorted(const StepFunction& f) {
    const StepFunction fs = rearrange(f);
    SortedCells out;
    out.X.push_back(0.0);
    for (const auto& c : fs.log_cells()) {
        out.X.push_back(out.X.back() + std::exp(c.log_len));
        out.w.push_back(std::exp(c.log_val));
    }
    return out;
}

/// Step sandwich of a nonincreasing piecewise A + B/x function over the
/// window [head, W]; `n` subcells per piece. Values sampled at subcell edges.
void sandwich_steps(const std::vector<HardyPiece>& pieces, double head, double W, int n,
                    std::vector<std::pair<double, double>>& lo_steps,
                    std::vector<std::pair<double, double>>& hi_steps) {
    lo_steps.clear();
    hi_steps.clear();
    for (const auto& p : pieces) {
        const double x_lo = std::max(p.x_lo, head);
        const double x_hi = std::min(p.x_hi, W);
        if (!(x_hi > x_lo)) continue;
        const int nn = (p.B == 0.0) ? 1 : std::max(1, n);
        for (int j = 0; j < nn; ++j) {
            const double a = x_lo + (x_hi - x_lo) * j / nn;
            const double b = x_lo + (x_hi - x_lo) * (j + 1) / nn;
            if (!(b > a)) continue;
            lo_steps.emplace_back(std::log(b), std::log(p.eval(b)));
            hi_steps.emplace_back(std::log(b), std::log(p.eval(a == 0.0 ? b : a)));
        }
    }
}

} // namespace

HardyEnvelope hardy_star(const StepFunction& f, int depth) {
    HardyEnvelope env;
    env.refinement_depth = depth;
    const auto sc = linear_sorted(f);
    if (sc.w.empty()) return env;

    double C = 0.0;  // ∫_0^{X_{i-1}} f*
    for (std::size_t i = 0; i < sc.w.size(); ++i) {
        const double x0 = sc.X[i], x1 = sc.X[i + 1];
        env.exact.push_back({x0, x1, sc.w[i], C - sc.w[i] * x0});
        C += sc.w[i] * (x1 - x0);
    }
    env.support_end = sc.X.back();
    env.tail_B = C;
    env.exact.push_back({env.support_end, num::pos_inf, 0.0, C});
    env.window_hi = env.support_end * std::exp(1.0 + depth);

    std::vector<std::pair<double, double>> lo_steps, hi_steps;
    sandwich_steps(env.exact, 0.0, env.window_hi, std::max(1, depth), lo_steps, hi_steps);
    std::vector<StepFunction::LogCell> lo_cells, hi_cells;
    double prev = num::neg_inf;
    for (std::size_t i = 0; i < lo_steps.size(); ++i) {
        const double len = num::logsubexp(lo_steps[i].first, prev);
        prev = lo_steps[i].first;
        lo_cells.push_back({len, lo_steps[i].second});
        hi_cells.push_back({len, hi_steps[i].second});
    }
    env.lower = StepFunction::from_log_cells(lo_cells);
    env.upper = StepFunction::from_log_cells(hi_cells);
    return env;
}

HardyEnvelope hardy_lowerstar(const StepFunction& f, int depth) {
    HardyEnvelope env;
    env.refinement_depth = depth;
    const auto sc = linear_sorted(f);
    if (sc.w.empty()) return env;

    // R_i = ∫_{X_{i+1}}^∞ f*; on cell i the value is (R_i + w_i X_{i+1})/x
    std::vector<double> R(sc.w.size() + 1, 0.0);
    for (std::size_t i = sc.w.size(); i-- > 0;)
        R[i] = R[i + 1] + sc.w[i] * (sc.X[i + 1] - sc.X[i]);
    for (std::size_t i = 0; i < sc.w.size(); ++i)
        env.exact.push_back({sc.X[i], sc.X[i + 1], 0.0, R[i + 1] + sc.w[i] * sc.X[i + 1]});
    env.support_end = sc.X.back();
    env.tail_B = 0.0;
    env.window_hi = env.support_end;

    // the head piece blows up at 0; steps cover [X1 e^{-1-depth}, end) and the
    // public sandwich anchors its head cell at the midpoint value
    const double head = env.exact.front().x_hi * std::exp(-1.0 - depth);
    std::vector<std::pair<double, double>> lo_steps, hi_steps;
    sandwich_steps(env.exact, head, env.support_end, std::max(1, depth), lo_steps, hi_steps);
    std::vector<StepFunction::LogCell> lo_cells, hi_cells;
    lo_cells.push_back({std::log(head), std::log(env.exact.front().eval(head))});
    hi_cells.push_back({std::log(head), std::log(env.exact.front().eval(0.5 * head))});
    double prev = std::log(head);
    for (std::size_t i = 0; i < lo_steps.size(); ++i) {
        const double len = num::logsubexp(lo_steps[i].first, prev);
        prev = lo_steps[i].first;
        lo_cells.push_back({len, lo_steps[i].second});
        hi_cells.push_back({len, hi_steps[i].second});
    }
    env.lower = StepFunction::from_log_cells(lo_cells);
    env.upper = StepFunction::from_log_cells(hi_cells);
    return env;
}

namespace {

/// Modular machinery for ||h||_{F,G} with h nonincreasing piecewise A + B/x:
/// modular(c) = ∫ G( h(e^{ψ(u)}) / c ) e^u du over u = ln y, where
/// ψ = log-log graph of F̃ ∘ G̃^{-1} maps u = ln y to ln x.
struct HardyModular {
    const PhiFunction& G;
    PhiFunction psi;
    const std::vector<HardyPiece>* pieces;

    HardyModular(const PhiFunction& F, const PhiFunction& G_, const std::vector<HardyPiece>* ps)
        : G(G_), psi(compose(tilde(F), inverse(tilde(G_)))), pieces(ps) {}

    // exact closed form for a pure B/x stretch, x in [e^{lx_lo}, e^{lx_hi}]
    double pure_Bx(double lnB, double lc, double lx_lo, double lx_hi) const {
        const double a = (lx_lo == num::neg_inf) ? num::neg_inf : psi.arg_log(lx_lo);
        const double b = (lx_hi == num::pos_inf) ? num::pos_inf : psi.arg_log(lx_hi);
        std::vector<double> cuts;
        for (double u : psi.knots_u())
            if (u > a && u < b) cuts.push_back(u);
        for (double gk : G.knots_u()) {
            const double u = psi.arg_log(lnB - lc - gk);
            if (u > a && u < b) cuts.push_back(u);
        }
        std::sort(cuts.begin(), cuts.end());
        cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
        cuts.push_back(b);

        auto expo = [&](double u) { return G.value_log(lnB - psi.value_log(u) - lc) + u; };
        double total = 0.0, lo = a;
        for (double hi : cuts) {
            if (!(hi > lo)) { lo = hi; continue; }
            double beta, alpha;
            if (lo == num::neg_inf) {
                const double e1 = expo(hi - 1.0), e2 = expo(hi);
                beta = e2 - e1;
                alpha = e2 - beta * hi;
            } else if (hi == num::pos_inf) {
                const double e1 = expo(lo), e2 = expo(lo + 1.0);
                beta = e2 - e1;
                alpha = e1 - beta * lo;
            } else {
                const double e1 = expo(lo), e2 = expo(hi);
                beta = (e2 - e1) / (hi - lo);
                alpha = e1 - beta * lo;
            }
            total += num::exp_affine_integral(alpha, beta, lo, hi);
            if (total == num::pos_inf) return total;
            lo = hi;
        }
        return total;
    }

    double pure_const(double lnA, double lc, double lx_lo, double lx_hi) const {
        const double a = (lx_lo == num::neg_inf) ? num::neg_inf : psi.arg_log(lx_lo);
        const double b = psi.arg_log(lx_hi);
        return num::exp_affine_integral(G.value_log(lnA - lc), 1.0, a, b);
    }

    // adaptive Simpson for a mixed piece, split at ψ knots for smoothness
    double mixed(const HardyPiece& p, double lc) const {
        const double a = psi.arg_log(std::log(p.x_lo)), b = psi.arg_log(std::log(p.x_hi));
        auto f = [&](double u) {
            const double x = std::exp(psi.value_log(u));
            return std::exp(G.value_log(std::log(p.A + p.B / x) - lc) + u);
        };
        std::vector<double> cuts{a};
        for (double u : psi.knots_u())
            if (u > a && u < b) cuts.push_back(u);
        cuts.push_back(b);

        std::function<double(double, double, double, double, double, double, int)> simp =
            [&](double x0, double x2, double f0, double f1, double f2, double whole,
                int rec) -> double {
            const double x1 = 0.5 * (x0 + x2);
            const double fl = f(0.5 * (x0 + x1)), fr = f(0.5 * (x1 + x2));
            const double L = (x1 - x0) / 6.0 * (f0 + 4 * fl + f1);
            const double Rg = (x2 - x1) / 6.0 * (f1 + 4 * fr + f2);
            if (rec <= 0 || std::abs(L + Rg - whole) <= 1e-13 * std::max(1.0, std::abs(L + Rg)))
                return L + Rg + (L + Rg - whole) / 15.0;
            return simp(x0, x1, f0, fl, f1, L, rec - 1) + simp(x1, x2, f1, fr, f2, Rg, rec - 1);
        };
        double total = 0.0;
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
            const double x0 = cuts[i], x2 = cuts[i + 1];
            if (!(x2 > x0)) continue;
            const double f0 = f(x0), f2 = f(x2), f1 = f(0.5 * (x0 + x2));
            const double whole = (x2 - x0) / 6.0 * (f0 + 4 * f1 + f2);
            total += simp(x0, x2, f0, f1, f2, whole, 40);
        }
        return total;
    }

    double exact_modular(double lc) const {
        double total = 0.0;
        for (const auto& p : *pieces) {
            if (p.A == 0.0 && p.B == 0.0) continue;
            const double lx_lo = p.x_lo == 0.0 ? num::neg_inf : std::log(p.x_lo);
            const double lx_hi = p.x_hi == num::pos_inf ? num::pos_inf : std::log(p.x_hi);
            if (p.A == 0.0)
                total += pure_Bx(std::log(p.B), lc, lx_lo, lx_hi);
            else if (p.B == 0.0)
                total += pure_const(std::log(p.A), lc, lx_lo, lx_hi);
            else
                total += mixed(p, lc);
            if (total == num::pos_inf) return total;
        }
        return total;
    }

    /// Modular of an absolutely positioned nonincreasing step list:
    /// entries (ln right-breakpoint, ln value), starting at e^{lx_start}.
    double step_modular(const std::vector<std::pair<double, double>>& steps, double lc,
                        double lx_start) const {
        double total = 0.0;
        double prev = (lx_start == num::neg_inf) ? num::neg_inf : psi.arg_log(lx_start);
        for (const auto& [lx, lv] : steps) {
            const double b = psi.arg_log(lx);
            total += num::exp_affine_integral(G.value_log(lv - lc), 1.0, prev, b);
            prev = b;
        }
        return total;
    }
};

void bisect_on(const std::function<double(double)>& modular, double lc_seed, double tol,
               NormResult& out) {
    double lc_lo = lc_seed, lc_hi = lc_seed;
    int guard = 0;
    while (modular(lc_hi) > 1.0 && guard++ < 400) lc_hi += 1.0;
    if (guard >= 400 || modular(lc_hi) == num::pos_inf) {
        out.lo = out.hi = num::pos_inf;
        out.divergent = DivergentEnd::at_infinity;
        return;
    }
    guard = 0;
    while (modular(lc_lo) < 1.0 && guard++ < 400) lc_lo -= 1.0;
    if (guard >= 400) {  // modular stays below 1 as c -> 0: the zero function
        out.lo = out.hi = 0.0;
        return;
    }
    int steps = 0;
    while (lc_hi - lc_lo > 0.5 * tol && steps < 200) {
        const double mid = 0.5 * (lc_lo + lc_hi);
        if (modular(mid) > 1.0)
            lc_lo = mid;
        else
            lc_hi = mid;
        ++steps;
    }
    out.lo = std::exp(lc_lo);
    out.hi = std::exp(lc_hi);
    out.tol = (out.hi - out.lo) / std::max(out.hi, 1e-300);
    out.bisection_steps = steps;
    out.modular_at_mid = modular(0.5 * (lc_lo + lc_hi));
}

} // namespace

EnvelopeNorm norm_of_envelope(const PhiFunction& F, const PhiFunction& G, const HardyEnvelope& env,
                              double tol, int depth_cap) {
    EnvelopeNorm result;
    if (env.exact.empty()) return result;
    HardyModular hm(F, G, &env.exact);
    const bool lowerstar = env.tail_B == 0.0;

    int depth = std::max(1, env.refinement_depth);
    double seed = 0.0;
    for (;;) {
        const double head = lowerstar ? env.exact.front().x_hi * std::exp(-1.0 - depth) : 0.0;
        const double W = lowerstar ? env.support_end : env.support_end * std::exp(1.0 + depth);
        std::vector<std::pair<double, double>> lo_steps, hi_steps;
        sandwich_steps(env.exact, head, W, depth, lo_steps, hi_steps);
        const double lx_start = lowerstar ? std::log(head) : num::neg_inf;

        auto modular_lower = [&](double lc) { return hm.step_modular(lo_steps, lc, lx_start); };
        auto modular_upper = [&](double lc) {
            double m = hm.step_modular(hi_steps, lc, lx_start);
            if (lowerstar) {
                const auto& h = env.exact.front();
                m += hm.pure_Bx(std::log(h.B), lc, num::neg_inf, std::log(head));
            } else if (env.tail_B > 0.0) {
                m += hm.pure_Bx(std::log(env.tail_B), lc, std::log(W), num::pos_inf);
            }
            return m;
        };

        NormResult lo_res, hi_res;
        bisect_on(modular_upper, seed, tol, hi_res);
        if (hi_res.divergent) {
            result.bracket = hi_res;
            result.depth_used = depth;
            return result;
        }
        bisect_on(modular_lower, seed, tol, lo_res);

        result.bracket.lo = lo_res.lo;
        result.bracket.hi = hi_res.hi;
        result.bracket.bisection_steps = lo_res.bisection_steps + hi_res.bisection_steps;
        result.bracket.modular_at_mid = hi_res.modular_at_mid;
        result.bracket.tol =
            (result.bracket.hi - result.bracket.lo) / std::max(result.bracket.hi, 1e-300);
        result.depth_used = depth;
        seed = std::log(std::max(result.bracket.hi, 1e-300));
        if (result.bracket.tol <= tol) return result;
        if (2 * depth > depth_cap) {
            result.capped = true;
            return result;
        }
        depth *= 2;
    }
}

double hardy_norm_exact(const PhiFunction& F, const PhiFunction& G, const HardyEnvelope& env,
                        double tol) {
    if (env.exact.empty()) return 0.0;
    HardyModular hm(F, G, &env.exact);
    NormResult r;
    bisect_on([&](double lc) { return hm.exact_modular(lc); }, 0.0, tol, r);
    if (r.divergent) return num::pos_inf;
    return std::sqrt(r.lo * r.hi);
}

} // namespace orlicz
