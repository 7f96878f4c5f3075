#pragma once

#include <cstddef>
#include <functional>

namespace tnncert {

/// Hardware concurrency, capped by the TNNCERT_THREADS environment variable.
unsigned worker_count();

/// Runs body(i) for i in [0, count) on up to worker_count() threads. Callers
/// write results into slot i, so output order never depends on scheduling.
/// The first exception thrown by any body is rethrown after all workers join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace tnncert
