#pragma once

#include <cstddef>
#include <functional>

namespace ips {

// Effective worker count: the request, else the IPS_WORKERS environment
// variable, else hardware concurrency.
unsigned worker_count(unsigned requested = 0);

// Runs fn(0) .. fn(count-1) on up to `workers` threads. Callers keep results
// deterministic by writing into per-index slots. The first exception thrown
// by any job is rethrown after all threads join.
void parallel_for_index(std::size_t count, unsigned workers,
                        const std::function<void(std::size_t)>& fn);

}  // namespace ips
