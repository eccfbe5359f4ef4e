#pragma once

#include <cstddef>
#include <functional>

namespace densdet {

// Runs body(i) for i in [0, n) over at most `workers` threads. Indices are
// split into contiguous chunks, so callers that write result[i] from body(i)
// get the same output for every worker count. workers <= 1 runs inline.
void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& body);

}  // namespace densdet
