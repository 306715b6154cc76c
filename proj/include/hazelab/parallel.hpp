#pragma once

#include <functional>

namespace hazelab {

/// Worker count for row-parallel loops: hardware concurrency, capped by
/// the HAZELAB_THREADS environment variable when it is set to a positive integer.
int worker_count();

/// Runs body(i) for i in [0, n) split into contiguous chunks across workers.
/// Each index is visited exactly once; bodies must only write state owned by index i.
void parallel_for(int n, const std::function<void(int)>& body);

}  // namespace hazelab
