// Copyright (c) 2026 the orliczlab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orlicz/indices.hpp"
#include "orlicz/norms.hpp"
#include "orlicz/phi.hpp"
#include "orlicz/step.hpp"

namespace orlicz {

enum class FamilyKind { disjoint_translates, nested_staircase, harmonic_comb, uniform_cells };

std::string family_kind_name(FamilyKind k);

/// Seeded generator configuration for the probes; the seed is recorded in
/// every report so a witness can be replayed.
struct FamilyConfig {
    std::uint64_t seed = 12345;
    std::vector<int> sizes = {1, 2, 4, 16, 64, 256};
    std::vector<FamilyKind> kinds = {FamilyKind::disjoint_translates, FamilyKind::nested_staircase,
                                     FamilyKind::harmonic_comb, FamilyKind::uniform_cells};
    double tol = 1e-11;
    int threads = 0;
};

/// Builds one family of n members; deterministic in (kind, n, seed).
std::vector<StepFunction> make_family(FamilyKind kind, int n, std::uint64_t seed);

/// Lower-bound probe for the p-convexity constant: the max over seeded
/// families of ||(Σ f_i^p)^{1/p}|| / (Σ ||f_i||^p)^{1/p}. A probe can refute
/// boundedness at desk scale but never prove it.
struct ConvexityReport {
    double exponent = 1.0;
    int family_count = 0;
    double max_ratio = 0.0;        // min_ratio for the concavity probe
    std::string witness_family;
    std::vector<std::pair<int, double>> curve;  // (n, extremal ratio at that n)
    std::uint64_t seed = 0;
    enum class Verdict { consistent, violated } verdict = Verdict::consistent;
};

ConvexityReport convexity_probe(const PhiFunction& F, const PhiFunction& G, double p,
                                const FamilyConfig& cfg);
ConvexityReport concavity_probe(const PhiFunction& F, const PhiFunction& G, double q,
                                const FamilyConfig& cfg);

/// Slope-monotonicity reading of the convexity/concavity hypotheses:
/// part (i) at exponent p needs G∘T^{1/p} equivalent to a convex function and
/// G̃∘F̃^{-1} concave; part (ii) dually at exponent q.
struct Thm51Report {
    bool i_holds = false;
    bool i_outer_convex_equiv = false;
    double i_equiv_constant = 0.0;
    bool i_inner_concave = false;
    bool ii_holds = false;
    bool ii_outer_concave_equiv = false;
    double ii_equiv_constant = 0.0;
    bool ii_inner_convex = false;
    double threshold = 8.0;
    std::string offending;  // knot of the worst slope inversion when a check fails
};
Thm51Report theorem51_hypotheses(const PhiFunction& F, const PhiFunction& G, double p, double q,
                                 double equiv_threshold = 8.0);

/// Empirical Hardy constant: max over samples of ||f**||_{F,G} / ||f||_{F,G}.
/// Requires the analytic lower Boyd bound to exceed 1; refused otherwise.
struct HardyProbeReport {
    bool refused = false;
    IndexBracket p_bracket;     // shown when refused
    int samples = 0;
    std::uint64_t seed = 0;
    double max_ratio = 0.0;
    double min_ratio = 0.0;
    bool left_inequality_ok = false;  // ||f|| <= ||f**|| on every sample
};
HardyProbeReport hardy_inequality_probe(const PhiFunction& F, const PhiFunction& G, int samples,
                                        std::uint64_t seed, double tol = 1e-11, int threads = 0);

/// Disjoint equidistributed copies and the L_{F,1} comparison.
struct Thm53Report {
    bool copies_identity_exact = false;  // (Σ g_i)* == (d_a f)* for integer 1/a
    int samples = 0;
    std::uint64_t seed = 0;
    double ratio_min = 0.0;  // ||f||_{F,G} / ||f||_{F,1} over samples
    double ratio_max = 0.0;
};
Thm53Report theorem53_necessity_probe(const PhiFunction& F, const PhiFunction& G, int samples,
                                      std::uint64_t seed);

/// Closed-form ||f||_{F,1} = ∫ F̃^{-1}(μ(|f| >= t)) dt for a step function.
double layer_cake_f1_norm(const PhiFunction& F, const StepFunction& f);

} // namespace orlicz
