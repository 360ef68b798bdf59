#pragma once

#include <thread>
#include <vector>

namespace metriq {

// Worker count: hardware parallelism, capped by the METRIQ_THREADS
// environment variable when set.
int thread_count();

// Folds indices [0, n) into per-worker copies of `init` via consume(state, i),
// then merges the copies in ascending worker order. Results are independent
// of the worker count as long as merge is a total-order reduction
// (min/max with index tie-breaks), which is how all callers use it.
template <typename State, typename Consume, typename Merge>
State parallel_reduce(long n, State init, Consume consume, Merge merge) {
  if (n <= 0) return init;
  int workers = thread_count();
  if (static_cast<long>(workers) > n) workers = static_cast<int>(n);

  if (workers <= 1) {
    State s = init;
    for (long i = 0; i < n; ++i) consume(s, i);
    return s;
  }

  std::vector<State> states(static_cast<std::size_t>(workers), init);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int t = 0; t < workers; ++t) {
    pool.emplace_back([&, t] {
      const long lo = n * t / workers;
      const long hi = n * (t + 1) / workers;
      State& s = states[static_cast<std::size_t>(t)];
      for (long i = lo; i < hi; ++i) consume(s, i);
    });
  }
  for (auto& th : pool) th.join();

  State out = std::move(states[0]);
  for (int t = 1; t < workers; ++t) merge(out, std::move(states[static_cast<std::size_t>(t)]));
  return out;
}

}  // namespace metriq
