#include "gft/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace gft {

namespace {

std::size_t hardware_default() { return std::max<std::size_t>(1, std::thread::hardware_concurrency()); }

std::atomic<std::size_t>& workers_slot() {
  static std::atomic<std::size_t> slot{hardware_default()};
  return slot;
}

}  // namespace

std::size_t worker_count() { return workers_slot().load(std::memory_order_relaxed); }

void set_worker_count(std::size_t workers) {
  workers_slot().store(workers == 0 ? hardware_default() : workers, std::memory_order_relaxed);
}

void parallel_for(std::size_t n, std::size_t grain, const std::function<void(std::size_t, std::size_t)>& body) {
  if (n == 0) return;
  grain = std::max<std::size_t>(grain, 1);
  const std::size_t blocks = (n + grain - 1) / grain;
  const std::size_t workers = std::min(worker_count(), blocks);
  if (workers <= 1) {
    body(0, n);
    return;
  }
  const std::size_t blocks_per_worker = (blocks + workers - 1) / workers;

  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::jthread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = std::min(n, w * blocks_per_worker * grain);
    const std::size_t end = std::min(n, (w + 1) * blocks_per_worker * grain);
    if (begin >= end) break;
    threads.emplace_back([&, begin, end] {
      try {
        body(begin, end);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  threads.clear();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace gft
