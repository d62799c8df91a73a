/*
 * Copyright 2026 The commfibre Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace commfibre::detail {

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Splits [0, total) into contiguous chunks and runs fn(begin, end, worker)
/// on each. Small ranges stay on the calling thread.
template <typename Fn>
void parallel_chunks(std::uint64_t total, unsigned threads, Fn&& fn) {
  constexpr std::uint64_t kMinPerWorker = 1u << 12;
  std::uint64_t workers = std::min<std::uint64_t>(resolve_threads(threads), std::max<std::uint64_t>(1, total / kMinPerWorker));
  if (workers <= 1) {
    fn(std::uint64_t{0}, total, 0u);
    return;
  }
  std::vector<std::thread> pool;
  const std::uint64_t step = (total + workers - 1) / workers;
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t begin = w * step;
    const std::uint64_t end = std::min(total, begin + step);
    if (begin >= end) break;
    pool.emplace_back([&fn, begin, end, w] { fn(begin, end, static_cast<unsigned>(w)); });
  }
  for (auto& t : pool) t.join();
}

inline std::uint64_t worker_count(std::uint64_t total, unsigned threads) {
  constexpr std::uint64_t kMinPerWorker = 1u << 12;
  return std::max<std::uint64_t>(
      1, std::min<std::uint64_t>(resolve_threads(threads), std::max<std::uint64_t>(1, total / kMinPerWorker)));
}

}  // namespace commfibre::detail
