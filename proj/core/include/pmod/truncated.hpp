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

#include <cstdint>
#include <limits>
#include <span>
#include <string>

namespace pmod {

/// What a truncated series was cut at: e.g. {"max_word_len", 8, 4120}.
struct Cutoff {
  std::string parameter;
  std::int64_t value = 0;
  std::int64_t terms = 0;  // number of series terms actually summed
};

/// A numeric value paired with the truncation that produced it.
template <class T>
struct TruncatedValue {
  T value{};
  Cutoff cutoff;
  /// Estimated size of the omitted remainder; +inf when no estimate is possible.
  double tail_estimate = std::numeric_limits<double>::infinity();
};

/**
 * Estimate of sum_{l > L} shells[l] for a decaying series whose shell
 * contributions may oscillate with a fixed period (word-length shells of
 * Fuchsian sums repeat with the cusp word length). The last two windows of
 * `period` shells are summed; the estimate is the larger of a geometric and a
 * power-law extrapolation of the window sums. Returns +inf with fewer than
 * two full windows after shell 0, or when the window sums do not decay fast
 * enough to be summable.
 */
double shell_tail_estimate(std::span<const double> shells, int period = 1);

}  // namespace pmod
