// Copyright (c) 2026 the orliczlab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace orlicz {

/// Index-parallel loop over [0, n). Bodies write to disjoint slots, so the
/// result is identical for any thread count; threads = 0 uses the OpenMP
/// default, threads = 1 forces serial execution.
template <typename Body>
void parallel_for(std::size_t n, int threads, Body&& body) {
#if defined(_OPENMP)
    if (threads != 1) {
        if (threads > 0) {
#pragma omp parallel for schedule(dynamic) num_threads(threads)
            for (long long i = 0; i < static_cast<long long>(n); ++i)
                body(static_cast<std::size_t>(i));
        } else {
#pragma omp parallel for schedule(dynamic)
            for (long long i = 0; i < static_cast<long long>(n); ++i)
                body(static_cast<std::size_t>(i));
        }
        return;
    }
#else
    (void)threads;
#endif
    for (std::size_t i = 0; i < n; ++i) body(i);
}

inline int hardware_threads() {
#if defined(_OPENMP)
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace orlicz
