#pragma once

#include <cstddef>
#include <functional>

namespace hapsim {

// Worker count used when a caller passes jobs == 0.
unsigned default_jobs();

// Splits [0, n) into contiguous chunks and runs chunk_fn(begin, end) on up to
// `jobs` concurrent workers. Callers write results into per-index storage, so
// output order never depends on scheduling. Exceptions from workers
// propagate to the caller.
void parallel_chunks(std::size_t n, unsigned jobs,
                     const std::function<void(std::size_t, std::size_t)>& chunk_fn);

}  // namespace hapsim
