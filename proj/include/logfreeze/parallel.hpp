#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <vector>

namespace logfreeze {

inline constexpr std::size_t kTaskSize = 256;

// LOGFREEZE_WORKERS if set, otherwise hardware concurrency.
int default_workers();

struct TaskRange {
  std::size_t begin;
  std::size_t end;
};

std::size_t task_count(std::size_t n_samples, std::size_t task_size = kTaskSize);
TaskRange task_range(std::size_t task, std::size_t n_samples, std::size_t task_size = kTaskSize);

// Runs body(task) for task in [0, n_tasks) on `workers` threads. Each task
// writes only its own slot, so results never depend on scheduling. The first
// exception (lowest task index) is rethrown after all workers stop.
void run_tasks(std::size_t n_tasks, int workers, const std::function<void(std::size_t)>& body);

template <class R, class F>
std::vector<R> map_tasks(std::size_t n_tasks, int workers, F&& f) {
  std::vector<R> out(n_tasks);
  run_tasks(n_tasks, workers, [&](std::size_t t) { out[t] = f(t); });
  return out;
}

}  // namespace logfreeze
