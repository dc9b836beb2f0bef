#include "holo/parallel.hpp"

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace holo {

namespace {
std::atomic<unsigned> g_jobs{0};
}

void set_max_jobs(unsigned jobs) { g_jobs.store(jobs); }

unsigned max_jobs() {
  const unsigned j = g_jobs.load();
  return j ? j : std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& f) {
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < count;) {
      try {
        f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const auto workers = static_cast<std::size_t>(std::min<std::size_t>(max_jobs(), count));
  std::vector<std::thread> pool;
  for (std::size_t i = 1; i < workers; ++i) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace holo
