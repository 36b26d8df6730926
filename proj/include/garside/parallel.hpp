#pragma once

#include <cstddef>
#include <functional>

namespace garside {

// Worker count used by parallel_for when jobs <= 0 is passed. Defaults to 1.
void set_default_jobs(int jobs);
int default_jobs();

// Calls body(i) for i in [0, n). Iterations are split into contiguous chunks;
// callers write into preallocated per-index slots so results do not depend on
// the worker count. The first exception thrown by any worker is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body, int jobs = 0);

}  // namespace garside
