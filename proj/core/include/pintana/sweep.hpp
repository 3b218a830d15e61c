#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "pintana/hierarchy.hpp"

namespace pintana {

// Worker count for frequency sweeps: PINTANA_THREADS if set, else the
// hardware concurrency.
unsigned sweep_threads();

// Evaluates f(i) for i in [0, n) on a static partition of threads. The
// output order is the index order, so results do not depend on the
// thread count.
template <class R, class F>
std::vector<R> parallel_map(std::size_t n, F&& f) {
  std::vector<R> out(n);
  const unsigned workers = std::max(1u, std::min<unsigned>(sweep_threads(), static_cast<unsigned>(n ? n : 1)));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    return out;
  }
  std::exception_ptr failure;
  std::mutex mu;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += workers) out[i] = f(i);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

// Reduces per-frequency value vectors to the max per k, keeping the first
// frequency (in sweep order) that attains it.
PredictionSeries reduce_max(const std::vector<Frequency>& freqs,
                            const std::vector<std::optional<std::vector<double>>>& values,
                            int k_max);

}  // namespace pintana
