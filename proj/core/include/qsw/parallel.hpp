// Deterministic data parallelism: a bounded worker pool running index-sliced
// loops.  Callers own the output layout (one preallocated slot per index), so
// results are bit-identical for every thread count.

#pragma once

#include <cstddef>
#include <functional>

namespace qsw {

/// Sets the global worker count (clamped to >= 1).  Default is 1.
void set_thread_count(int t);

int thread_count();

/// Invokes fn(i) for every 0 <= i < count.  fn must only write to slots
/// owned by index i.  Exceptions are captured and rethrown on the caller.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace qsw
