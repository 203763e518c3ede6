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

#include "pmod/truncated.hpp"

#include <algorithm>
#include <cmath>

namespace pmod {

double shell_tail_estimate(std::span<const double> shells, int period) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  if (period < 1) period = 1;
  const std::size_t w = static_cast<std::size_t>(period);
  const std::size_t n = shells.size();
  if (n < 2 * w + 1) return kInf;
  double last = 0.0;
  double prev = 0.0;
  for (std::size_t i = 0; i < w; ++i) {
    last += shells[n - 1 - i];
    prev += shells[n - 1 - w - i];
  }
  if (last == 0.0 && prev == 0.0) return 0.0;
  if (!(prev > 0.0)) return kInf;

  const double q = last / prev;
  if (!(q < 1.0)) return kInf;
  const double geometric = last * q / (1.0 - q);
  if (last <= 0.0) return geometric;

  // Window sums W ~ C l^-p at the window centres; sum_{j>=1} (1 + j w / L)^-p <= L / (w (p - 1)).
  const double len = static_cast<double>(n - 1);
  const double centre = len - 0.5 * static_cast<double>(w - 1);
  const double p = std::log(prev / last) / std::log(centre / (centre - static_cast<double>(w)));
  if (!(p > 1.0)) return kInf;
  const double power = last * len / (static_cast<double>(w) * (p - 1.0));
  return std::max(geometric, power);
}

}  // namespace pmod
