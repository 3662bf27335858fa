// SPDX-License-Identifier: Apache-2.0
//
// Minimal deterministic task parallelism for curve sweeps and verification
// suites. Tasks are independent and written to slots by index, so results
// do not depend on scheduling. RENYI_THREADS caps the worker count.

#pragma once

#include <functional>

namespace renyi::par {

/// Worker cap from the RENYI_THREADS environment variable (positive
/// integer), falling back to the hardware concurrency. Throws
/// std::invalid_argument on a malformed value.
int thread_cap();

/// Runs fn(0..count-1), possibly concurrently with at most max_threads
/// workers (<= 1 means sequential).
void parallel_for(int count, int max_threads, const std::function<void(int)>& fn);

}  // namespace renyi::par
