// Copyright 2026 The chartclean Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Bounded fan-out over an index range.

#ifndef CHARTCLEAN_PARALLEL_H_
#define CHARTCLEAN_PARALLEL_H_

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace chartclean {

struct ParallelFailure {
  size_t index;
  std::exception_ptr error;
};

// Calls fn(state, i) for every i in [0, n) using at most `parallelism`
// threads; each thread builds its own state with make_state(). Indices are
// claimed in increasing order and no new index is claimed after a failure, so
// every index below the first observed failure still runs. The returned
// failure is therefore always the lowest failing index, whatever the
// scheduling. With parallelism <= 1 everything runs on the calling thread.
template <typename MakeState, typename Fn>
std::optional<ParallelFailure> ParallelForWithState(size_t n, size_t parallelism,
                                                    MakeState make_state, Fn fn) {
  std::atomic<size_t> next{0};
  std::atomic<bool> stop{false};
  std::mutex mu;
  std::optional<ParallelFailure> failure;

  auto worker = [&] {
    auto state = make_state();
    for (;;) {
      if (stop.load(std::memory_order_acquire)) return;
      const size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        fn(state, i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure || i < failure->index) {
          failure = ParallelFailure{i, std::current_exception()};
        }
        stop.store(true, std::memory_order_release);
      }
    }
  };

  const size_t threads = std::min(std::max<size_t>(parallelism, 1), n);
  if (threads <= 1) {
    if (n > 0) worker();
    return failure;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return failure;
}

template <typename Fn>
std::optional<ParallelFailure> ParallelFor(size_t n, size_t parallelism, Fn fn) {
  return ParallelForWithState(
      n, parallelism, [] { return 0; }, [&fn](int&, size_t i) { fn(i); });
}

}  // namespace chartclean

#endif  // CHARTCLEAN_PARALLEL_H_
