#include "logfreeze/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <thread>

#include "logfreeze/error.hpp"

namespace logfreeze {

int default_workers() {
  if (const char* env = std::getenv("LOGFREEZE_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 1024) return static_cast<int>(v);
    throw ConfigError("LOGFREEZE_WORKERS must be an integer in [1, 1024]");
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

std::size_t task_count(std::size_t n_samples, std::size_t task_size) {
  return (n_samples + task_size - 1) / task_size;
}

TaskRange task_range(std::size_t task, std::size_t n_samples, std::size_t task_size) {
  const std::size_t b = task * task_size;
  return {std::min(b, n_samples), std::min(b + task_size, n_samples)};
}

void run_tasks(std::size_t n_tasks, int workers, const std::function<void(std::size_t)>& body) {
  if (workers < 1) throw ConfigError("worker count must be positive");
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::mutex mu;
  std::size_t err_task = n_tasks;
  std::exception_ptr err;

  auto loop = [&] {
    for (;;) {
      if (failed.load(std::memory_order_relaxed)) return;
      const std::size_t t = next.fetch_add(1);
      if (t >= n_tasks) return;
      try {
        body(t);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (t < err_task) {
          err_task = t;
          err = std::current_exception();
        }
        failed = true;
      }
    }
  };

  const std::size_t nw = std::min<std::size_t>(static_cast<std::size_t>(workers), std::max<std::size_t>(n_tasks, 1));
  if (nw <= 1) {
    loop();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nw - 1);
    for (std::size_t i = 1; i < nw; ++i) pool.emplace_back(loop);
    loop();
    for (auto& th : pool) th.join();
  }
  if (err) std::rethrow_exception(err);
}

}  // namespace logfreeze
