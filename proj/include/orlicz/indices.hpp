// Copyright (c) 2026 the orliczlab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orlicz/counterexample.hpp"
#include "orlicz/norms.hpp"
#include "orlicz/phi.hpp"
#include "orlicz/step.hpp"

namespace orlicz {

/// Two-sided enclosure of an index with the provenance of each bound.
struct IndexBracket {
    double lo = 0.0;
    double hi = 0.0;
    std::string lo_provenance;
    std::string hi_provenance;
    std::optional<std::string> witness;  // replayable description of an empirical bound

    bool contains(double x, double slack = 0.0) const { return x >= lo - slack && x <= hi + slack; }
    double width() const { return hi - lo; }
};

/// Zippin indices of L_{F,G}: repackaged Matuszewska–Orlicz indices of F,
/// cross-checked against characteristic-function dilation ratios.
struct ZippinReport {
    IndexBracket p_z, q_z;
    double chi_read_lo = 0.0;   // extreme χ-ratio exponent reads over the grid
    double chi_read_hi = 0.0;
    bool consistent = true;     // reads fall inside [p_m, q_m] up to slack
};
ZippinReport zippin_indices(const PhiFunction& F, const PhiFunction& G);

/// Theorem-style sandwich for the Boyd indices:
///   p ∈ [p_m(F∘G^{-1})·p_m(G), p_m(F)],  q ∈ [q_m(F), q_m(F∘G^{-1})·q_m(G)],
/// plus the weaker product bounds for display.
struct BoydAnalytic {
    IndexBracket p, q;
    double p_weak_lo = 0.0;  // p_m(F)·p_m(G)/q_m(G)
    double q_weak_hi = 0.0;  // q_m(F)·q_m(G)/p_m(G)
};
BoydAnalytic boyd_analytic_bracket(const PhiFunction& F, const PhiFunction& G);

struct DictionaryEntry {
    std::string name;
    StepFunction f;
};

/// Characteristic functions and staircases at geometric scales; when a
/// counterexample ledger is supplied, the extremal block witnesses join the
/// dictionary.
std::vector<DictionaryEntry> default_dictionary(const PhiFunction& F, const PhiFunction& G,
                                                const CounterexampleSpec* ce = nullptr);

/// a = 2^{±k/4}, k = 0..40.
std::vector<double> default_a_grid();

struct DilationSample {
    double a = 1.0;
    double ratio = 1.0;   // max over the dictionary of ||d_a f|| / ||f||
    int witness = -1;     // index of the maximizing dictionary entry
};

struct DilationProfile {
    std::vector<DilationSample> samples;
    std::vector<std::string> witness_names;
};

/// Certified lower bounds on ||d_a|| over the grid. Embarrassingly parallel
/// over (a, witness); the serial variant is the reference implementation the
/// parallel kernel is tested against.
DilationProfile dilation_profile(const PhiFunction& F, const PhiFunction& G,
                                 const std::vector<DictionaryEntry>& dictionary,
                                 const std::vector<double>& a_grid, double tol = 1e-12,
                                 int threads = 0);
DilationProfile dilation_profile_serial(const PhiFunction& F, const PhiFunction& G,
                                        const std::vector<DictionaryEntry>& dictionary,
                                        const std::vector<double>& a_grid, double tol = 1e-12);

/// Converts witness ratios into index bounds (a ratio a^{-1/r} at a < 1
/// forces p ≤ r; at a > 1 it forces q ≥ r) and intersects with the analytic
/// bracket. An empty intersection signals a bug and throws.
struct BoydEmpirical {
    IndexBracket p, q;
    double p_upper_empirical = 0.0;
    double q_lower_empirical = 0.0;
};
BoydEmpirical boyd_empirical_bounds(const DilationProfile& profile, const BoydAnalytic& analytic);

} // namespace orlicz
