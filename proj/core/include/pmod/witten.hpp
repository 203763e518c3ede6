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
#include <optional>
#include <span>
#include <vector>

#include "pmod/parabolic.hpp"
#include "pmod/truncated.hpp"

namespace pmod {

/// Largest order for which Bernoulli data is kept as exact rationals.
inline constexpr int kMaxBernoulliOrder = 12;

/// B_n with B_1 = -1/2. Throws std::domain_error for n outside [0, kMaxBernoulliOrder].
Rational bernoulli_number(int n);

/// Coefficients of B_p(x) in ascending powers of x.
std::vector<Rational> bernoulli_polynomial(int p);

/**
 * sum_{m >= 1} sin(2 pi m x) / m^p for odd p and sum_{m >= 1} cos(2 pi m x) / m^p
 * for even p, in closed form through B_p of the fractional part of x.
 * Throws std::invalid_argument for p < 1 and for p = 1 at integer x.
 */
double bernoulli_series(int p, double x);

struct WittenOptions {
  bool exact_only = false;
  std::int64_t terms = 1'000'000;          // direct summation cutoff for p >= 2
  double abel_radius = 1.0 - 1e-6;         // p = 1
  std::int64_t abel_terms = 10'000'000;    // p = 1
};

struct WittenVolume {
  int p = 0;  // 2g - 2 + n
  std::optional<double> exact;
  std::optional<TruncatedValue<double>> numeric;
};

/**
 * Rank-2 symplectic volume
 *   Vol = 2^(2g-1+n) pi^(4g-4+n) sum_{m >= 1} prod_i sin(2 pi alpha_i m) / m^p.
 * The exact value expands the product of sines over sign patterns and sums
 * each harmonic series in closed form; it is absent when p exceeds
 * kMaxBernoulliOrder. The numeric value sums the series directly for p >= 2
 * and by Abel summation for p = 1. Throws std::invalid_argument unless p >= 1
 * and every alpha_i lies in (0, 1/2).
 */
WittenVolume witten_volume(int genus, std::span<const double> alphas, const WittenOptions& options = {});

}  // namespace pmod
