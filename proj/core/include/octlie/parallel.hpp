#pragma once

#include <cstddef>
#include <functional>

namespace octlie {

// Worker count: OCTLIE_THREADS if set, else hardware concurrency.
int thread_count();

// Runs f(i) for i in [0, n) on thread_count() workers with a static block
// partition. Results must be written to preallocated per-index slots so the
// outcome is identical for any worker count. The first exception thrown by
// any worker is rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f);

}  // namespace octlie
