// Copyright (c) 2026 the orliczlab authors
// SPDX-License-Identifier: Apache-2.0

// Times the dilation-profile kernel: serial reference vs the OpenMP path.

#include <chrono>
#include <cstdio>

#include "orlicz/indices.hpp"
#include "orlicz/parallel.hpp"

using namespace orlicz;
using clock_type = std::chrono::steady_clock;

namespace {

double run_ms(const char* label, const PhiFunction& F, const PhiFunction& G,
              const std::vector<DictionaryEntry>& dict, const std::vector<double>& grid,
              int threads) {
    const auto t0 = clock_type::now();
    const auto prof = threads == 1 ? dilation_profile_serial(F, G, dict, grid)
                                   : dilation_profile(F, G, dict, grid, 1e-12, threads);
    const auto ms = std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
    double checksum = 0.0;
    for (const auto& s : prof.samples) checksum += s.ratio;
    std::printf("%-22s %8.1f ms   (checksum %.12g)\n", label, ms, checksum);
    return ms;
}

} // namespace

int main() {
    const auto built = build_theorem41_phi(1.0, 2.0, 5);
    const auto F = PhiFunction::power(1.0);
    const auto dict = default_dictionary(F, built.phi, &built.spec);
    const auto grid = default_a_grid();

    std::printf("dilation profile: %zu witnesses x %zu dilations, %d hardware threads\n",
                dict.size(), grid.size(), hardware_threads());
    const double serial = run_ms("serial reference", F, built.phi, dict, grid, 1);
    const double par = run_ms("openmp", F, built.phi, dict, grid, 0);
    if (par > 0.0) std::printf("speedup: %.2fx\n", serial / par);
    return 0;
}
