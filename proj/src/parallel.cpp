#include "steiner/parallel.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace steiner {

unsigned resolve_thread_count(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

void for_each_slot(std::uint64_t slots, unsigned threads,
                   const std::function<void(std::uint64_t)>& fn) {
  const unsigned workers =
      static_cast<unsigned>(std::min<std::uint64_t>(resolve_thread_count(threads), slots));
  if (workers <= 1) {
    for (std::uint64_t s = 0; s < slots; ++s) fn(s);
    return;
  }

  std::atomic<std::uint64_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto body = [&] {
    for (;;) {
      const std::uint64_t s = next.fetch_add(1, std::memory_order_relaxed);
      if (s >= slots) return;
      try {
        fn(s);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body);
  pool.clear();  // joins
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace steiner
