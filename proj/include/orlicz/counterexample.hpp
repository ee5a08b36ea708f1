// Copyright (c) 2026 the orliczlab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "orlicz/phi.hpp"
#include "orlicz/step.hpp"

namespace orlicz {

/// One self-similar stretch of the construction: from the anchor upward the
/// graph alternates slopes p, q on `count + 1` pairs of log-length ln(a)
/// segments, and the scale a satisfies
///     count · a^{-p} (1 - a^{-(p+q)}) + a^{-2p-q} = 1.
struct BlockParams {
    double p = 1.0, q = 1.0;  // pattern pair, p-sloped segment first
    double a = 1.0;           // solved scale, > 1
    int count = 0;            // number of telescoping summands
    double log_anchor = 0.0;  // ln M, the scale anchor
};

/// Parameters and derived breakpoint ledger of the two-sided construction.
/// All breakpoints are stored as natural logs; the linear values overflow
/// double precision after a few blocks.
struct CounterexampleSpec {
    enum class Variant { thm41, thm42 };

    double p = 1.0, q = 2.0;
    int blocks = 0;
    std::string schedule = "pow2";
    Variant variant = Variant::thm41;

    struct Block {
        int M = 0, N = 0;        // plan integers (telescoping counts)
        double a = 1.0, b = 1.0; // solved scales
        double log_A = 0.0;      // anchor of the p-first stretch
        double log_B = 0.0;      // anchor of the q-first stretch (thm41 only)
        double p_k = 0.0;        // block exponent (thm42 only)
    };
    std::vector<Block> ledger;
    bool growth_ok = true;       // thm42: whether a_k^{q/p_k} increases across blocks
};

struct BuiltCounterexample {
    PhiFunction phi;
    CounterexampleSpec spec;
};

struct ScheduleError : std::invalid_argument {
    explicit ScheduleError(const std::string& what) : std::invalid_argument(what) {}
};

/// Unique root a > 1 of count·a^{-p}(1-a^{-(p+q)}) + a^{-2p-q} = 1 beyond the
/// left-hand side's peak (the degenerate root a = 1 is rejected). Requires
/// count·(p+q) > 2p+q so that the root exists.
double solve_block_scale(double p, double q, int count);

/// The two-sided φ-function: alternating p,q blocks then q,p blocks at
/// super-geometrically growing scales, G(1) = 1, reflected through the tilde
/// symmetry for t < 1. Carries declared indices (p, q).
BuiltCounterexample build_theorem41_phi(double p, double q, int K,
                                        const std::string& schedule = "pow2");

/// The dilatory-but-degenerate variant: q = 1 blocks with exponents p_k
/// growing along the schedule. Declared indices (1, ∞). The builder reports
/// whether a_k^{q/p_k} grows across blocks; a schedule with constant
/// exponents is rejected.
BuiltCounterexample build_theorem42_phi(int K, const std::string& schedule = "pow2");

/// Pattern parameters of block k of a built spec; b_side selects the q-first
/// stretch (thm41 only).
BlockParams block_params(const CounterexampleSpec& spec, int k, bool b_side);

/// The extremal pair (f, g) for a block: f has the displayed staircase cells,
/// g = a^{-(p/q)θ} · d_{a^{-θ}} f built by exact log-cell arithmetic.
/// θ in [0, min(q/p, 1)].
std::pair<StepFunction, StepFunction> lemma43_witnesses(const BlockParams& blk, double theta);

struct Lemma43Report {
    double theta = 0.0;
    double norm_f = 0.0, norm_g = 0.0;  // both 1 when the block is exact
    double modular_f_at_1 = 0.0, modular_g_at_1 = 0.0;
    double dilation_ratio = 0.0;        // ||d_{a^{-θ}} f|| / ||f||
    double expected_ratio = 0.0;        // a^{(p/q)θ} for the pattern pair of the block
    bool cells_identity = false;        // g == a^{-(p/q)θ} d_{a^{-θ}} f, exact cells
    double worst_err = 0.0;
    bool pass = false;
};

/// Checks the normalization identities and the dilation identity of a block's
/// witness pair against the full norm pipeline.
Lemma43Report verify_lemma43(const PhiFunction& G, const BlockParams& blk, const StepFunction& f,
                             const StepFunction& g, double theta, double tol);

} // namespace orlicz
