#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace lengthsmith {

/// Upper bound on worker threads used by bulk operations. Zero means
/// "hardware concurrency". One disables threading entirely.
void set_thread_limit(unsigned limit);
unsigned thread_limit();

/// Calls body(worker, begin, end) on disjoint chunks of [0, count) and
/// returns the number of workers used. The first exception thrown by any
/// worker is rethrown after all workers join.
template <typename Body>
unsigned parallel_chunks(std::size_t count, Body&& body) {
  const unsigned workers = static_cast<unsigned>(std::max<std::size_t>(
      1, std::min<std::size_t>(thread_limit(), count / 64)));
  if (workers == 1) {
    body(0u, std::size_t{0}, count);
    return 1;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t begin = count * w / workers;
    const std::size_t end = count * (w + 1) / workers;
    pool.emplace_back([&, w, begin, end] {
      try {
        body(w, begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return workers;
}

}  // namespace lengthsmith
