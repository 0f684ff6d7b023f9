#pragma once

#include <cstddef>
#include <functional>

namespace wfatlas {

/// Worker count: set_thread_limit() if nonzero, else WFATLAS_THREADS, else hardware concurrency.
std::size_t thread_count();
void set_thread_limit(std::size_t n);  // 0 restores the default

/// Runs body(i) for i in [0, n); nested calls run serially. Results must be written
/// by index; the first exception (lowest i) is rethrown after all workers stop.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace wfatlas
