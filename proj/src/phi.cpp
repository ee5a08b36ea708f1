// Copyright (c) 2026 the orliczlab authors
// SPDX-License-Identifier: Apache-2.0

#include "orlicz/phi.hpp"

#include <algorithm>
#include <cmath>

#include "orlicz/num.hpp"

namespace orlicz {

namespace {

constexpr double kSlopeMergeTol = 1e-12;
constexpr double kKnotMergeTol = 1e-13;

bool slopes_close(double a, double b) {
    return std::abs(a - b) <= kSlopeMergeTol * std::max({1.0, std::abs(a), std::abs(b)});
}

} // namespace

PhiFunction PhiFunction::power(double p) {
    if (!(p > 0.0)) throw std::invalid_argument("phi power: exponent must be positive");
    PhiFunction f;
    f.us_ = {0.0};
    f.vs_ = {0.0};
    f.tail_lo_ = {p, 1.0};
    f.tail_hi_ = {p, 1.0};
    f.prov_ = PhiProvenance::power;
    return f;
}

PhiFunction PhiFunction::from_knots(std::vector<double> us, std::vector<double> vs,
                                    Slope tail_lo, Slope tail_hi, PhiProvenance prov) {
    if (us.empty() || us.size() != vs.size())
        throw std::invalid_argument("phi from_knots: need matching nonempty knot lists");
    if (!(tail_lo.value() > 0.0) || !(tail_hi.value() > 0.0))
        throw std::invalid_argument("phi from_knots: tail slopes must be positive");
    for (std::size_t i = 0; i + 1 < us.size(); ++i) {
        if (!(us[i] < us[i + 1]))
            throw std::invalid_argument("phi from_knots: knot abscissae must strictly increase");
        if (!((vs[i + 1] - vs[i]) > 0.0))
            throw std::invalid_argument("phi from_knots: slopes must be strictly positive");
    }
    PhiFunction f;
    f.us_ = std::move(us);
    f.vs_ = std::move(vs);
    f.tail_lo_ = tail_lo;
    f.tail_hi_ = tail_hi;
    f.prov_ = prov;
    f.canonicalize();
    return f;
}

void PhiFunction::canonicalize() {
    // drop interior knots where the slope does not change
    if (us_.size() > 1) {
        std::vector<double> us{us_.front()}, vs{vs_.front()};
        auto slope = [&](double u0, double v0, double u1, double v1) { return (v1 - v0) / (u1 - u0); };
        for (std::size_t i = 1; i + 1 < us_.size(); ++i) {
            const double sl = slope(us.back(), vs.back(), us_[i], vs_[i]);
            const double sr = slope(us_[i], vs_[i], us_[i + 1], vs_[i + 1]);
            if (!slopes_close(sl, sr)) {
                us.push_back(us_[i]);
                vs.push_back(vs_[i]);
            }
        }
        us.push_back(us_.back());
        vs.push_back(vs_.back());
        us_ = std::move(us);
        vs_ = std::move(vs);
    }
    // absorb boundary knots that merely continue a tail
    while (us_.size() > 1 && slopes_close(segment_slope(0), tail_lo_.value())) {
        us_.erase(us_.begin());
        vs_.erase(vs_.begin());
    }
    while (us_.size() > 1 && slopes_close(segment_slope(us_.size() - 2), tail_hi_.value())) {
        us_.pop_back();
        vs_.pop_back();
    }
    // pure powers anchor at u = 0
    if (us_.size() == 1 && tail_lo_.same_value(tail_hi_) && us_[0] != 0.0) {
        vs_[0] -= tail_lo_.value() * us_[0];
        us_[0] = 0.0;
    }
}

double PhiFunction::segment_slope(std::size_t i) const {
    return (vs_[i + 1] - vs_[i]) / (us_[i + 1] - us_[i]);
}

double PhiFunction::value_log(double u) const {
    if (u <= us_.front()) return vs_.front() + tail_lo_.value() * (u - us_.front());
    if (u >= us_.back()) return vs_.back() + tail_hi_.value() * (u - us_.back());
    const auto it = std::upper_bound(us_.begin(), us_.end(), u);
    const std::size_t i = static_cast<std::size_t>(it - us_.begin()) - 1;
    return vs_[i] + segment_slope(i) * (u - us_[i]);
}

double PhiFunction::arg_log(double v) const {
    if (v <= vs_.front()) return us_.front() + (v - vs_.front()) / tail_lo_.value();
    if (v >= vs_.back()) return us_.back() + (v - vs_.back()) / tail_hi_.value();
    const auto it = std::upper_bound(vs_.begin(), vs_.end(), v);
    const std::size_t i = static_cast<std::size_t>(it - vs_.begin()) - 1;
    return us_[i] + (v - vs_[i]) / segment_slope(i);
}

double PhiFunction::operator()(double t) const {
    if (t < 0.0) throw std::domain_error("phi eval: negative argument");
    if (t == 0.0) return 0.0;
    return std::exp(value_log(std::log(t)));
}

double PhiFunction::inverse_at(double y) const {
    if (y < 0.0) throw std::domain_error("phi inverse_at: negative argument");
    if (y == 0.0) return 0.0;
    return std::exp(arg_log(std::log(y)));
}

double PhiFunction::slope_at(double u) const {
    if (u < us_.front()) return tail_lo_.value();
    if (u >= us_.back()) return tail_hi_.value();
    const auto it = std::upper_bound(us_.begin(), us_.end(), u);
    const std::size_t i = static_cast<std::size_t>(it - us_.begin()) - 1;
    return segment_slope(i);
}

PhiFunction PhiFunction::with_pattern(std::optional<std::pair<double, double>> declared) const {
    PhiFunction f = *this;
    f.pattern_ = true;
    f.declared_mo_ = declared;
    return f;
}

PhiFunction PhiFunction::vshift(double s) const {
    PhiFunction f = *this;
    for (double& v : f.vs_) v += s;
    return f;
}

PhiFunction inverse(const PhiFunction& f) {
    PhiFunction g;
    g.us_ = f.vs_;
    g.vs_ = f.us_;
    g.tail_lo_ = f.tail_lo_.recip();
    g.tail_hi_ = f.tail_hi_.recip();
    g.prov_ = PhiProvenance::inverse;
    g.pattern_ = f.pattern_;
    if (f.declared_mo_) {
        const auto [p, q] = *f.declared_mo_;
        g.declared_mo_ = {q == num::pos_inf ? 0.0 : 1.0 / q, p == 0.0 ? num::pos_inf : 1.0 / p};
    }
    return g;
}

PhiFunction tilde(const PhiFunction& f) {
    PhiFunction g;
    g.us_.assign(f.us_.rbegin(), f.us_.rend());
    g.vs_.assign(f.vs_.rbegin(), f.vs_.rend());
    for (double& u : g.us_) u = -u;
    for (double& v : g.vs_) v = -v;
    g.tail_lo_ = f.tail_hi_;
    g.tail_hi_ = f.tail_lo_;
    g.prov_ = PhiProvenance::tilde;
    g.pattern_ = f.pattern_;
    g.declared_mo_ = f.declared_mo_; // indices are tilde-invariant
    return g;
}

PhiFunction compose(const PhiFunction& outer, const PhiFunction& inner) {
    // knot set: inner's knots plus preimages of outer's knots under inner
    std::vector<double> us(inner.us_.begin(), inner.us_.end());
    us.reserve(inner.us_.size() + outer.us_.size());
    for (double uo : outer.us_) us.push_back(inner.arg_log(uo));
    std::sort(us.begin(), us.end());
    us.erase(std::unique(us.begin(), us.end(),
                         [](double a, double b) {
                             return std::abs(a - b) <= kKnotMergeTol * std::max(1.0, std::abs(a));
                         }),
             us.end());

    std::vector<double> vs(us.size());
    for (std::size_t i = 0; i < us.size(); ++i) vs[i] = outer.value_log(inner.value_log(us[i]));

    PhiFunction g;
    g.us_ = std::move(us);
    g.vs_ = std::move(vs);
    g.tail_lo_ = outer.tail_lo_ * inner.tail_lo_;
    g.tail_hi_ = outer.tail_hi_ * inner.tail_hi_;
    g.prov_ = PhiProvenance::compose;
    g.pattern_ = outer.pattern_ || inner.pattern_;
    // declared indices survive composition with a pure power only
    if (outer.declared_mo_ && !inner.pattern_ && inner.segment_count() == 0 &&
        inner.tail_lo_.same_value(inner.tail_hi_)) {
        const double s = inner.tail_lo_.value();
        g.declared_mo_ = {outer.declared_mo_->first * s, outer.declared_mo_->second * s};
    } else if (inner.declared_mo_ && !outer.pattern_ && outer.segment_count() == 0 &&
               outer.tail_lo_.same_value(outer.tail_hi_)) {
        const double s = outer.tail_lo_.value();
        g.declared_mo_ = {inner.declared_mo_->first * s, inner.declared_mo_->second * s};
    }
    g.canonicalize();
    return g;
}

// -- indices -------------------------------------------------------------------

std::vector<WindowPoint> window_scan(const PhiFunction& f, int ladder) {
    const auto us = f.knots_u();
    const double span = us.empty() ? 1.0 : std::max(1.0, us.back() - us.front());
    double h_min = span;
    for (std::size_t i = 0; i + 1 < us.size(); ++i) h_min = std::min(h_min, us[i + 1] - us[i]);
    h_min = std::max(h_min * 0.5, 1e-6);
    const double h_max = 2.0 * span;

    std::vector<WindowPoint> curve;
    curve.reserve(static_cast<std::size_t>(ladder));
    for (int j = 0; j < ladder; ++j) {
        const double h = h_min * std::pow(h_max / h_min, double(j) / double(ladder - 1));
        // chord mean over [u, u+h]; extrema occur at knots, knot-preimages, or tails
        double inf_m = std::min(f.tail_lo().value(), f.tail_hi().value());
        double sup_m = std::max(f.tail_lo().value(), f.tail_hi().value());
        auto consider = [&](double u) {
            const double m = (f.value_log(u + h) - f.value_log(u)) / h;
            inf_m = std::min(inf_m, m);
            sup_m = std::max(sup_m, m);
        };
        for (double u : us) {
            consider(u);
            consider(u - h);
        }
        curve.push_back({h, inf_m, sup_m});
    }
    return curve;
}

MatuszewskaIndices mo_indices(const PhiFunction& f) {
    MatuszewskaIndices mo;
    const double t_lo = f.tail_lo().value(), t_hi = f.tail_hi().value();
    if (!f.truncated_pattern()) {
        // Interior slope excursions are absorbed by the constant c in the
        // defining inequality; only the tails survive the long-window limit.
        mo.p_m = std::min(t_lo, t_hi);
        mo.q_m = std::max(t_lo, t_hi);
        mo.method = MatuszewskaIndices::Method::exact_from_slopes;
        return mo;
    }
    // truncation of a declared infinite pattern: plateau reads over the
    // represented span
    double s_min = std::min(t_lo, t_hi), s_max = std::max(t_lo, t_hi);
    for (std::size_t i = 0; i < f.segment_count(); ++i) {
        s_min = std::min(s_min, f.segment_slope(i));
        s_max = std::max(s_max, f.segment_slope(i));
    }
    mo.p_m = s_min;
    mo.q_m = s_max;
    if (f.declared_mo()) {
        mo.p_m = f.declared_mo()->first;
        if (f.declared_mo()->second == num::pos_inf)
            mo.q_m = num::pos_inf;
        else
            mo.q_m = f.declared_mo()->second;
    }
    mo.method = MatuszewskaIndices::Method::window_scan;
    mo.window_curve = window_scan(f);
    return mo;
}

Tristate is_dilatory(const PhiFunction& f) {
    const auto mo = mo_indices(f);
    return mo.p_m > 0.0 ? Tristate::yes : Tristate::no;
}

Tristate satisfies_delta2(const PhiFunction& f) {
    const auto mo = mo_indices(f);
    return mo.q_m < num::pos_inf ? Tristate::yes : Tristate::no;
}

// -- equivalence ----------------------------------------------------------------

double equivalence_constant(const PhiFunction& f, const PhiFunction& g) {
    if (!f.tail_lo().same_value(g.tail_lo()) || !f.tail_hi().same_value(g.tail_hi())) {
        // allow value-equal ratios in different representations
        const double a = f.tail_lo().value(), b = g.tail_lo().value();
        const double c = f.tail_hi().value(), d = g.tail_hi().value();
        if (!slopes_close(a, b) || !slopes_close(c, d)) return num::pos_inf;
    }
    // D(u) = u - f^{-1}(g(u)) is piecewise linear; extrema at g's knots and at
    // preimages of f's knots under g
    double worst = 0.0;
    auto consider = [&](double u) {
        const double d = u - f.arg_log(g.value_log(u));
        worst = std::max(worst, std::abs(d));
    };
    for (double u : g.knots_u()) consider(u);
    for (double v : f.knots_v()) consider(g.arg_log(v));
    // tail offsets (limits of D at ±inf)
    consider(std::min(f.knots_u().front(), g.knots_u().front()) - 1.0);
    consider(std::max(f.knots_u().back(), g.knots_u().back()) + 1.0);
    return std::exp(worst);
}

bool equivalent(const PhiFunction& f, const PhiFunction& g, double c_max) {
    if (!(c_max >= 1.0)) throw std::invalid_argument("equivalent: c_max must be >= 1");
    const double c = equivalence_constant(f, g);
    return c <= c_max * (1.0 + 1e-12);
}

PhiFunction complementary(const PhiFunction& f) {
    auto check = [&](double s, const char* where) {
        if (!(s > 1.0))
            throw NotNFunction(std::string("complementary: slope ") + std::to_string(s) +
                               " <= 1 at " + where);
    };
    check(f.tail_lo().value(), "lower tail");
    check(f.tail_hi().value(), "upper tail");
    for (std::size_t i = 0; i < f.segment_count(); ++i) {
        if (!(f.segment_slope(i) > 1.0))
            throw NotNFunction("complementary: slope <= 1 on segment " + std::to_string(i));
    }
    // inverse graph of F*: v_{F*^{-1}}(u) = u - v_{F^{-1}}(u); knots of F^{-1}
    // sit at (v_i, u_i), so F* has knots (v_i - u_i, v_i).
    const auto us = f.knots_u();
    const auto vs = f.knots_v();
    std::vector<double> cu(us.size()), cv(us.size());
    for (std::size_t i = 0; i < us.size(); ++i) {
        cu[i] = vs[i] - us[i];
        cv[i] = vs[i];
    }
    PhiFunction g = PhiFunction::from_knots(std::move(cu), std::move(cv),
                                            f.tail_lo().conjugate(), f.tail_hi().conjugate(),
                                            PhiProvenance::complementary);
    return g;
}

} // namespace orlicz
