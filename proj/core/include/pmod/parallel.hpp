// Copyright 2026 The pmod Authors
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

#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace pmod {

/// Worker count: PM_THREADS if set to a positive integer, else hardware concurrency.
int thread_count();

/**
 * Sums term(i) for i in [first, last) in fixed-size blocks. Each block is
 * summed in index order and block sums are combined in index order, so the
 * result does not depend on how many threads run the blocks.
 */
template <class T, class Term>
T ordered_block_sum(std::int64_t first, std::int64_t last, Term term, std::int64_t block = 1 << 16) {
  if (last <= first) return T{};
  const std::int64_t n_blocks = (last - first + block - 1) / block;
  std::vector<T> partial(static_cast<std::size_t>(n_blocks), T{});
  auto run = [&](std::int64_t b) {
    const std::int64_t lo = first + b * block;
    const std::int64_t hi = std::min(last, lo + block);
    T acc{};
    for (std::int64_t i = lo; i < hi; ++i) acc += term(i);
    partial[static_cast<std::size_t>(b)] = acc;
  };
  const int workers = static_cast<int>(std::min<std::int64_t>(thread_count(), n_blocks));
  if (workers <= 1) {
    for (std::int64_t b = 0; b < n_blocks; ++b) run(b);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::int64_t b = w; b < n_blocks; b += workers) run(b);
      });
    }
    for (auto& t : pool) t.join();
  }
  T total{};
  for (const T& x : partial) total += x;
  return total;
}

}  // namespace pmod
