// Copyright (c) 2026 the orliczlab authors
// SPDX-License-Identifier: Apache-2.0

#include "orlicz/counterexample.hpp"

#include <algorithm>
#include <cmath>

#include "orlicz/norms.hpp"
#include "orlicz/num.hpp"

namespace orlicz {

double solve_block_scale(double p, double q, int count) {
    if (!(p > 0.0) || !(q > 0.0)) throw std::invalid_argument("solve_block_scale: need p, q > 0");
    if (!(count * (p + q) > 2.0 * p + q))
        throw ScheduleError("solve_block_scale: count*(p+q) <= 2p+q, no root a > 1");
    const auto lhs = [&](double a) {
        return count * std::pow(a, -p) * (1.0 - std::pow(a, -(p + q))) + std::pow(a, -2.0 * p - q);
    };
    // LHS equals 1 at a = 1, rises above 1, then decays to 0; bracket the
    // descending crossing
    double hi = 2.0;
    while (lhs(hi) > 1.0) hi *= 2.0;
    double lo = 1.0 + 1e-9;
    for (int i = 0; i < 200 && !(lhs(lo) > 1.0); ++i) lo = 1.0 + (lo - 1.0) * 0.5;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (lhs(mid) > 1.0)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= 1e-13 * hi) break;
    }
    return 0.5 * (lo + hi);
}

namespace {

int schedule_count(const std::string& schedule, int k) {
    if (schedule == "pow2") return 1 << (k + 1);
    if (schedule == "linear") return 2 * (k + 1) + 1;
    if (schedule.rfind("const:", 0) == 0) return std::stoi(schedule.substr(6));
    throw ScheduleError("unknown schedule: " + schedule);
}

/// Appends clause pairs for one stretch: count+1 pairs of (slope s1, slope s2)
/// segments, each of log-length la.
void append_stretch(std::vector<double>& us, std::vector<double>& vs, double s1, double s2,
                    double la, int count) {
    for (int n = 0; n <= count; ++n) {
        us.push_back(us.back() + la);
        vs.push_back(vs.back() + s1 * la);
        us.push_back(us.back() + la);
        vs.push_back(vs.back() + s2 * la);
    }
}

PhiFunction reflect_and_finish(std::vector<double> us, std::vector<double> vs, double tail_slope,
                               std::optional<std::pair<double, double>> declared) {
    // G = G̃ on t < 1: reflect the graph through (u,v) -> (-u,-v)
    std::vector<double> fu, fv;
    fu.reserve(2 * us.size());
    fv.reserve(2 * vs.size());
    for (std::size_t i = us.size(); i-- > 1;) {
        fu.push_back(-us[i]);
        fv.push_back(-vs[i]);
    }
    fu.insert(fu.end(), us.begin(), us.end());
    fv.insert(fv.end(), vs.begin(), vs.end());
    PhiFunction g = PhiFunction::from_knots(std::move(fu), std::move(fv),
                                            {tail_slope, 1.0}, {tail_slope, 1.0},
                                            PhiProvenance::counterexample);
    return g.with_pattern(declared);
}

} // namespace

BuiltCounterexample build_theorem41_phi(double p, double q, int K, const std::string& schedule) {
    if (!(0.0 < p && p < q)) throw std::invalid_argument("build_theorem41_phi: need 0 < p < q");
    if (K < 1) throw std::invalid_argument("build_theorem41_phi: need K >= 1");

    CounterexampleSpec spec;
    spec.p = p;
    spec.q = q;
    spec.blocks = K;
    spec.schedule = schedule;
    spec.variant = CounterexampleSpec::Variant::thm41;

    std::vector<double> us{0.0}, vs{0.0};
    double prev_a = 1.0, prev_b = 1.0;
    for (int k = 0; k < K; ++k) {
        CounterexampleSpec::Block blk;
        blk.M = blk.N = schedule_count(schedule, k);
        blk.a = solve_block_scale(p, q, blk.M);
        blk.b = solve_block_scale(q, p, blk.N);
        if (!(blk.a > prev_a) || !(blk.b > prev_b))
            throw ScheduleError("build_theorem41_phi: scales must strictly increase");
        prev_a = blk.a;
        prev_b = blk.b;
        blk.log_A = us.back();
        append_stretch(us, vs, p, q, std::log(blk.a), blk.M);
        blk.log_B = us.back();
        append_stretch(us, vs, q, p, std::log(blk.b), blk.N);
        spec.ledger.push_back(blk);
    }
    return {reflect_and_finish(std::move(us), std::move(vs), p, std::make_pair(p, q)), spec};
}

BuiltCounterexample build_theorem42_phi(int K, const std::string& schedule) {
    if (K < 1) throw std::invalid_argument("build_theorem42_phi: need K >= 1");
    if (schedule == "const")
        throw ScheduleError("build_theorem42_phi: constant exponent schedule keeps a_k^{q/p_k} "
                            "bounded");

    CounterexampleSpec spec;
    spec.p = 1.0;
    spec.q = 1.0;
    spec.blocks = K;
    spec.schedule = schedule;
    spec.variant = CounterexampleSpec::Variant::thm42;

    std::vector<double> us{0.0}, vs{0.0};
    double prev_growth = 0.0;
    spec.growth_ok = true;
    for (int k = 0; k < K; ++k) {
        CounterexampleSpec::Block blk;
        blk.p_k = double(1 << (k + 1));  // growing exponents, q stays 1
        blk.N = blk.M = schedule_count(schedule, k);
        blk.a = solve_block_scale(blk.p_k, 1.0, blk.N);
        blk.log_A = us.back();
        append_stretch(us, vs, blk.p_k, 1.0, std::log(blk.a), blk.N);
        const double growth = std::pow(blk.a, 1.0 / blk.p_k);
        if (k > 0 && growth <= prev_growth) spec.growth_ok = false;
        prev_growth = growth;
        spec.ledger.push_back(blk);
    }
    return {reflect_and_finish(std::move(us), std::move(vs), 1.0,
                               std::make_pair(1.0, num::pos_inf)),
            spec};
}

BlockParams block_params(const CounterexampleSpec& spec, int k, bool b_side) {
    const auto& blk = spec.ledger.at(static_cast<std::size_t>(k));
    if (spec.variant == CounterexampleSpec::Variant::thm42) {
        if (b_side) throw std::invalid_argument("block_params: thm42 has no q-first stretches");
        return {blk.p_k, 1.0, blk.a, blk.N, blk.log_A};
    }
    if (b_side) return {spec.q, spec.p, blk.b, blk.N, blk.log_B};
    return {spec.p, spec.q, blk.a, blk.M, blk.log_A};
}

std::pair<StepFunction, StepFunction> lemma43_witnesses(const BlockParams& blk, double theta) {
    const double theta_max = std::min(blk.q / blk.p, 1.0);
    if (!(theta >= 0.0) || theta > theta_max * (1.0 + 1e-12))
        throw std::invalid_argument("lemma43_witnesses: theta outside [0, min(q/p,1)]");
    const double la = std::log(blk.a);
    const double lM = blk.log_anchor;
    const int n1 = blk.count - 1;  // n0 = 0; count telescoping summands

    std::vector<StepFunction::LogCell> cells;
    cells.reserve(static_cast<std::size_t>(blk.count) + 1);
    cells.push_back({lM, -3.0 * la - lM});  // [0, M a^{0}) at value M^{-1} a^{-3}
    const double two_seg = std::log(std::expm1(2.0 * la));
    for (int n = 0; n <= n1; ++n)
        cells.push_back({2.0 * n * la + two_seg + lM, (-2.0 * n - 3.0) * la - lM});
    StepFunction f = StepFunction::from_log_cells(std::move(cells), /*sorted_hint=*/true);
    StepFunction g = scale_log(dilate_log(f, -theta * la), -(blk.p / blk.q) * theta * la);
    return {std::move(f), std::move(g)};
}

Lemma43Report verify_lemma43(const PhiFunction& G, const BlockParams& blk, const StepFunction& f,
                             const StepFunction& g, double theta, double tol) {
    Lemma43Report rep;
    rep.theta = theta;
    const PhiFunction one = PhiFunction::power(1.0);
    const double la = std::log(blk.a);

    rep.norm_f = orlicz_lorentz_norm(one, G, f, tol * 1e-2).value();
    rep.norm_g = orlicz_lorentz_norm(one, G, g, tol * 1e-2).value();
    rep.modular_f_at_1 = orlicz_lorentz_modular(one, G, f, 1.0);
    rep.modular_g_at_1 = orlicz_lorentz_modular(one, G, g, 1.0);

    const StepFunction df = dilate_log(f, -theta * la);
    rep.dilation_ratio = orlicz_lorentz_norm(one, G, df, tol * 1e-2).value() / rep.norm_f;
    rep.expected_ratio = std::exp((blk.p / blk.q) * theta * la);

    const StepFunction g_rebuilt = scale_log(df, -(blk.p / blk.q) * theta * la);
    rep.cells_identity = g.cell_count() == g_rebuilt.cell_count();
    if (rep.cells_identity) {
        const auto ga = g.log_cells();
        const auto gb = g_rebuilt.log_cells();
        for (std::size_t i = 0; i < ga.size(); ++i)
            if (ga[i].log_len != gb[i].log_len || ga[i].log_val != gb[i].log_val)
                rep.cells_identity = false;
    }

    rep.worst_err = std::max({std::abs(rep.norm_f - 1.0), std::abs(rep.norm_g - 1.0),
                              std::abs(rep.modular_f_at_1 - 1.0),
                              std::abs(rep.modular_g_at_1 - 1.0),
                              std::abs(rep.dilation_ratio / rep.expected_ratio - 1.0)});
    rep.pass = rep.cells_identity && rep.worst_err <= tol;
    return rep;
}

} // namespace orlicz
