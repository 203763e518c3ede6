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
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

namespace pmod {

using Rational = boost::rational<std::int64_t>;

double to_double(const Rational& q);
std::string to_string(const Rational& q);

/**
 * A parabolic weight in [0, 1). Weights given as "p/q" (or as integers) are
 * kept exactly; decimal input is kept as a double and flagged inexact.
 */
class Weight {
 public:
  Weight() = default;
  static Weight exact(Rational q);
  static Weight approximate(double x);
  /// Accepts "p/q", an integer, or a decimal literal.
  static Weight parse(std::string_view text);

  double value() const { return value_; }
  const std::optional<Rational>& rational() const { return rational_; }
  bool is_exact() const { return rational_.has_value(); }
  std::string to_string() const;

 private:
  double value_ = 0.0;
  std::optional<Rational> rational_;
};

struct WeightBlock {
  Weight alpha;
  int mult = 1;
};

/// Weight blocks at one marked point, strictly increasing in alpha.
struct CuspWeights {
  std::vector<WeightBlock> blocks;

  int rank() const;
  int levels() const { return static_cast<int>(blocks.size()); }
};

/// Throws std::invalid_argument unless 0 <= alpha < 1, mult >= 1 and alphas increase strictly.
CuspWeights make_cusp_weights(std::vector<WeightBlock> blocks);

struct ParabolicData {
  int genus = 0;
  int rank = 1;
  int degree = 0;
  std::vector<CuspWeights> cusps;
};

/// Throws std::invalid_argument unless 2g + n - 2 > 0 and every cusp has total multiplicity k.
void validate(const ParabolicData& d);

ParabolicData make_parabolic_data(int genus, int rank, int degree, std::vector<CuspWeights> cusps);

/// deg E + sum over cusps and levels of k_l alpha_l.
double parabolic_degree(const ParabolicData& d);

/// Whether sum_l k_l alpha_l is an integer at every cusp; exact for rational weights.
bool is_integral(const ParabolicData& d, double tol = 1e-12);

struct FlagDims {
  Rational dim_c;  // complex dimension of U(k) / prod U(k_l)
  int dim_r = 0;   // k^2 - sum k_l^2
};

/// Throws std::invalid_argument when the multiplicities do not sum to k.
FlagDims flag_dims(const CuspWeights& c, int k);

struct ModuliDims {
  int d = 0;
  std::optional<int> d0;  // present only for integral structures
};

/**
 * d = k^2 (g - 1) + 1 + sum_i dim_C F_i, and d0 = d - g when the structure is
 * integral. With require_d0 a non-integral structure throws std::invalid_argument.
 */
ModuliDims moduli_dims(const ParabolicData& d, bool require_d0 = false);

/**
 * Multiplicity of the continuous spectrum, sum_i sum_l (k_l^i)^2. The value is
 * cross-checked against n k^2 - sum_i dim_R F_i; a mismatch throws std::logic_error.
 */
int continuous_multiplicity(const ParabolicData& d);

}  // namespace pmod
