#pragma once

#include <cstddef>
#include <functional>

namespace geomforge {

/// Worker count used by parallel loops (default 1). Results never depend on it:
/// every parallel loop writes to index-addressed slots only.
void set_thread_count(int n);
int thread_count();

/// Runs fn(i) for i in [0, n), split into contiguous chunks across workers.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace geomforge
