#pragma once

#include <cstddef>
#include <functional>

namespace l2limits {

/// Worker count: L2LIMITS_THREADS if set to a positive integer, otherwise
/// std::thread::hardware_concurrency(), never less than 1.
std::size_t thread_count();

/// Runs body(i) for i in [0, n). Each index runs exactly once; results
/// must be written to per-index slots so the outcome is order-independent.
/// The first exception thrown by a body is rethrown after all workers stop.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace l2limits
