#pragma once

#include <cstddef>
#include <functional>

namespace almg {

/// Worker count: ALMG_WORKERS if set, else hardware concurrency.
std::size_t worker_count();

/// Runs fn(0..n-1) across workers. Callers keep determinism by writing
/// results into index-addressed slots; no ordering is guaranteed otherwise.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace almg
