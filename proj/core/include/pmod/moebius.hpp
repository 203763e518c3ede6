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

#include <complex>
#include <optional>
#include <ostream>
#include <string_view>

namespace pmod {

/// Tolerance for trace and entry comparisons of PSL(2,R) elements.
inline constexpr double kTraceTol = 1e-9;

enum class MapKind { identity, hyperbolic, parabolic, elliptic };

std::string_view to_string(MapKind kind);

/**
 * An element of PSL(2,R): a real unimodular 2x2 matrix [[a, b], [c, d]]
 * with M and -M identified.
 *
 * Every instance is stored in canonical sign: the first entry of (c, d, a, b),
 * in that order, whose magnitude exceeds a small threshold is positive. Two maps
 * that agree projectively therefore agree entrywise, which makes the entries
 * usable as dedup keys.
 */
class MoebiusMap {
 public:
  /// The identity map.
  MoebiusMap() = default;

  /// Throws std::invalid_argument unless ad - bc = 1 (relative tolerance 1e-10).
  MoebiusMap(double a, double b, double c, double d);

  static MoebiusMap identity() { return {}; }
  static MoebiusMap translation(double t) { return MoebiusMap(1.0, t, 0.0, 1.0); }
  /// z -> lambda z, lambda > 0.
  static MoebiusMap dilation(double lambda);

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }
  double d() const { return d_; }

  double det() const { return a_ * d_ - b_ * c_; }
  double trace() const { return a_ + d_; }
  double max_abs_entry() const;

  MoebiusMap inverse() const;

  /// (az + b)/(cz + d). Throws std::invalid_argument unless Im z > 0.
  std::complex<double> apply(std::complex<double> z) const;

  /// Entrywise comparison of canonical representatives.
  bool approx_equal(const MoebiusMap& other, double tol = kTraceTol) const;
  bool is_identity(double tol = kTraceTol) const { return approx_equal(identity(), tol); }

  friend MoebiusMap compose(const MoebiusMap& m1, const MoebiusMap& m2);
  friend std::ostream& operator<<(std::ostream& os, const MoebiusMap& m);

 private:
  struct Unchecked {};
  MoebiusMap(Unchecked, double a, double b, double c, double d);
  void canonicalize();

  double a_ = 1.0;
  double b_ = 0.0;
  double c_ = 0.0;
  double d_ = 1.0;
};

/// Matrix product m1 * m2 in canonical sign.
MoebiusMap compose(const MoebiusMap& m1, const MoebiusMap& m2);

inline MoebiusMap operator*(const MoebiusMap& m1, const MoebiusMap& m2) { return compose(m1, m2); }

MapKind classify(const MoebiusMap& m, double tol = kTraceTol);

/**
 * Norm N > 1 of a hyperbolic element, the square of its larger eigenvalue:
 * N = ((|t| + sqrt(t^2 - 4)) / 2)^2 with t the trace.
 *
 * Throws std::domain_error for non-hyperbolic input.
 */
double norm(const MoebiusMap& m);

/// Fixed point on the boundary of a parabolic map; std::nullopt means infinity.
std::optional<double> parabolic_fixed_point(const MoebiusMap& m);

}  // namespace pmod
