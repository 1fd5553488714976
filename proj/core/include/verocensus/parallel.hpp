#pragma once

#include <cstdlib>
#include <thread>
#include <vector>

namespace vrc {

/// Worker count: VEROCENSUS_WORKERS if set and positive, else the
/// hardware concurrency (at least 1).
inline int worker_count() {
  if (const char* env = std::getenv("VEROCENSUS_WORKERS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

/// Static range split; fn(i) runs once for every index.  Writers must
/// target disjoint, index-addressed slots.
template <class Fn>
void parallel_for(std::size_t n, Fn fn) {
  const int workers = std::min<std::size_t>(worker_count(), n == 0 ? 1 : n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(workers);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    threads.emplace_back([&fn, lo, hi] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (std::thread& t : threads) t.join();
}

/// Static range split with one accumulator per worker, merged in worker
/// order.  The result is independent of the worker count as long as
/// `accumulate` commutes with `merge` over disjoint index ranges, which
/// holds for all the counting sweeps here.
template <class State, class Accumulate, class Merge>
State parallel_reduce(std::size_t n, State init, Accumulate accumulate,
                      Merge merge) {
  const int workers =
      std::min<std::size_t>(worker_count(), n == 0 ? 1 : n);
  if (workers <= 1) {
    State s = init;
    for (std::size_t i = 0; i < n; ++i) accumulate(s, i);
    return s;
  }
  std::vector<State> states(workers, init);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    threads.emplace_back([&, w, lo, hi] {
      for (std::size_t i = lo; i < hi; ++i) accumulate(states[w], i);
    });
  }
  for (std::thread& t : threads) t.join();
  State out = init;
  for (const State& s : states) merge(out, s);
  return out;
}

}  // namespace vrc
