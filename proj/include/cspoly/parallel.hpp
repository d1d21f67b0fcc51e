#ifndef CSPOLY_PARALLEL_HPP
#define CSPOLY_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace cspoly {

/// Worker count: CSPOLY_THREADS if set to a positive integer, otherwise
/// the hardware concurrency (at least 1).
unsigned thread_count();

/// Runs body(i) for i in [0, n). Each index runs exactly once; the first
/// exception thrown by any call is rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace cspoly

#endif
