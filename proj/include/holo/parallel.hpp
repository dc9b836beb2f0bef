#pragma once

#include <atomic>
#include <cstddef>
#include <functional>

namespace holo {

/// Worker cap shared by the parallel loops; 0 means hardware concurrency.
void set_max_jobs(unsigned jobs);
unsigned max_jobs();

/// Runs f(0..count-1) on up to max_jobs() threads. Exceptions are
/// rethrown on the caller, lowest index first.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& f);

}  // namespace holo
