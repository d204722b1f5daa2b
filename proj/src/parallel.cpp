#include "lengthsmith/parallel.hpp"

#include <atomic>

namespace lengthsmith {

namespace {
std::atomic<unsigned> g_thread_limit{0};
}

void set_thread_limit(unsigned limit) { g_thread_limit.store(limit); }

unsigned thread_limit() {
  unsigned limit = g_thread_limit.load();
  if (limit == 0) limit = std::max(1u, std::thread::hardware_concurrency());
  return limit;
}

}  // namespace lengthsmith
