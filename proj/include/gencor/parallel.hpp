#pragma once

#include <cstddef>
#include <functional>

namespace gencor {

/// Worker count: GCOR_THREADS when set to a positive integer, otherwise the hardware
/// concurrency (at least 1).
std::size_t worker_count();

/// Calls body(begin, end) on disjoint chunks covering [0, count). Chunks write to disjoint
/// outputs, so results do not depend on scheduling.
void parallel_for(std::size_t count, const std::function<void(std::size_t, std::size_t)>& body,
                  std::size_t grain = 1024);

}  // namespace gencor
