// Copyright 2026 The wrp-srg Authors.
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

#ifndef WRP_PARALLEL_HPP_
#define WRP_PARALLEL_HPP_

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace wrp {

// Worker count; 0 selects std::thread::hardware_concurrency().
inline unsigned resolve_workers(unsigned workers) {
  if (workers != 0) return workers;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Calls fn(i) for every i in [0, count), splitting the range into contiguous
// blocks across threads. fn must only write state owned by index i, which
// makes the result independent of the worker count. The first exception
// thrown by any block is rethrown on the calling thread.
template <typename Fn>
void parallel_for(std::size_t count, unsigned workers, Fn&& fn) {
  unsigned threads = std::min<std::size_t>(resolve_workers(workers), count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mu;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  std::size_t block = (count + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    std::size_t begin = t * block;
    std::size_t end = std::min(count, begin + block);
    if (begin >= end) break;
    pool.emplace_back([&, begin, end] {
      try {
        for (std::size_t i = begin; i < end; ++i) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace wrp

#endif  // WRP_PARALLEL_HPP_
