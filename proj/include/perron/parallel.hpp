#pragma once

#include <cstddef>
#include <functional>

namespace perron {

// Worker threads to use: hardware concurrency capped by PERRON_FORGE_THREADS.
unsigned worker_count();

// Runs fn(i) for i in [0, n) on up to worker_count() threads. Each index is
// handled exactly once; callers store results by index for determinism.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace perron
