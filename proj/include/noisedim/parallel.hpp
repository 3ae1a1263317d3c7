#ifndef NOISEDIM_PARALLEL_HPP
#define NOISEDIM_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace noisedim {

/// Name of the environment variable holding the default worker count.
inline constexpr const char* kThreadsEnvVar = "NOISEDIM_THREADS";

/// `requested` if nonzero, else $NOISEDIM_THREADS, else the hardware
/// concurrency (at least 1).
unsigned resolve_thread_count(unsigned requested);

/// Runs task(i) for every i in [0, count) on up to `threads` workers.
/// Tasks must write only to their own slot; the first exception thrown by
/// any task is rethrown after all workers join.
template <typename Task>
void parallel_for(std::size_t count, unsigned threads, Task&& task) {
  threads = resolve_thread_count(threads);
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
      try {
        task(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(count);
      }
    }
  };

  const std::size_t spawn = std::min<std::size_t>(threads, count) - 1;
  std::vector<std::thread> pool;
  pool.reserve(spawn);
  for (std::size_t t = 0; t < spawn; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace noisedim

#endif  // NOISEDIM_PARALLEL_HPP
