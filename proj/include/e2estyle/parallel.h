// Copyright 2026 The e2estyle Authors.
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

// Order-preserving parallel map over an index range.

#ifndef E2ESTYLE_PARALLEL_H_
#define E2ESTYLE_PARALLEL_H_

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <type_traits>
#include <vector>

namespace e2estyle {

// Resolves a requested job count: 0 means one per hardware thread.
inline std::size_t ResolveJobs(std::size_t jobs) {
  if (jobs != 0) return jobs;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Calls fn(i) for every i in [0, n) on up to `jobs` threads and returns the
// results in index order, so the output never depends on `jobs`. The first
// exception thrown by fn is rethrown on the calling thread.
template <typename Fn>
auto ParallelMap(std::size_t n, std::size_t jobs, Fn fn)
    -> std::vector<std::invoke_result_t<Fn &, std::size_t>> {
  using Result = std::invoke_result_t<Fn &, std::size_t>;
  static_assert(!std::is_same_v<Result, bool>,
                "std::vector<bool> elements share storage across threads");
  std::vector<Result> out(n);
  const std::size_t workers = std::min(ResolveJobs(jobs), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mu;
  auto work = [&] {
    constexpr std::size_t kChunk = 64;
    while (!failed.load(std::memory_order_relaxed)) {
      const std::size_t begin = next.fetch_add(kChunk);
      if (begin >= n) return;
      const std::size_t end = std::min(n, begin + kChunk);
      try {
        for (std::size_t i = begin; i < end; ++i) out[i] = fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
        failed = true;
        return;
      }
    }
  };
  std::vector<std::thread> threads;
  threads.reserve(workers - 1);
  for (std::size_t t = 1; t < workers; ++t) threads.emplace_back(work);
  work();
  for (auto &t : threads) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace e2estyle

#endif  // E2ESTYLE_PARALLEL_H_
