#pragma once

#include <cstddef>
#include <functional>

namespace bidisk {

/// Worker count: BIDISK_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
int default_thread_count();

/// Runs body(i) for i in [0, n) on up to `threads` workers (0 = default).
/// Indices are handed out dynamically; callers write results by index so the
/// outcome does not depend on scheduling. The first exception is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body, int threads = 0);

} // namespace bidisk
