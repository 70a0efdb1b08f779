#pragma once

#include <cstddef>
#include <functional>

namespace covertab {

// Number of workers to use: explicit request, else hardware concurrency
// capped by the COVERTAB_THREADS environment variable.
std::size_t worker_count(std::size_t requested = 0);

// Runs fn(i) for i in [0,n). Work is split into contiguous index blocks, one
// per worker, so callers that write to slot i of a preallocated buffer get
// deterministic results independent of the worker count. The first exception
// thrown by any worker is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn,
                  std::size_t workers = 0);

}  // namespace covertab
