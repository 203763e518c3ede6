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

#include "pmod/moebius.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace pmod {

namespace {

// Entries below this (relative to the largest entry) are treated as zero when
// choosing the projective sign.
constexpr double kSignThreshold = 1e-12;

}  // namespace

std::string_view to_string(MapKind kind) {
  switch (kind) {
    case MapKind::identity: return "identity";
    case MapKind::hyperbolic: return "hyperbolic";
    case MapKind::parabolic: return "parabolic";
    case MapKind::elliptic: return "elliptic";
  }
  return "unknown";
}

MoebiusMap::MoebiusMap(double a, double b, double c, double d) : a_(a), b_(b), c_(c), d_(d) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(d)) {
    throw std::invalid_argument("MoebiusMap: non-finite entry");
  }
  const double scale = std::max(1.0, max_abs_entry() * max_abs_entry());
  if (std::abs(det() - 1.0) > 1e-10 * scale) {
    std::ostringstream msg;
    msg << "MoebiusMap: determinant " << det() << " differs from 1";
    throw std::invalid_argument(msg.str());
  }
  canonicalize();
}

MoebiusMap::MoebiusMap(Unchecked, double a, double b, double c, double d)
    : a_(a), b_(b), c_(c), d_(d) {
  canonicalize();
}

MoebiusMap MoebiusMap::dilation(double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("MoebiusMap::dilation: lambda must be positive");
  const double r = std::sqrt(lambda);
  return MoebiusMap(r, 0.0, 0.0, 1.0 / r);
}

double MoebiusMap::max_abs_entry() const {
  return std::max({std::abs(a_), std::abs(b_), std::abs(c_), std::abs(d_)});
}

void MoebiusMap::canonicalize() {
  const double threshold = kSignThreshold * max_abs_entry();
  for (double x : {c_, d_, a_, b_}) {
    if (std::abs(x) > threshold) {
      if (x < 0.0) {
        a_ = -a_;
        b_ = -b_;
        c_ = -c_;
        d_ = -d_;
      }
      return;
    }
  }
}

MoebiusMap MoebiusMap::inverse() const { return MoebiusMap(Unchecked{}, d_, -b_, -c_, a_); }

std::complex<double> MoebiusMap::apply(std::complex<double> z) const {
  if (!(z.imag() > 0.0)) throw std::invalid_argument("MoebiusMap::apply: Im z must be positive");
  return (a_ * z + b_) / (c_ * z + d_);
}

bool MoebiusMap::approx_equal(const MoebiusMap& other, double tol) const {
  return std::abs(a_ - other.a_) <= tol && std::abs(b_ - other.b_) <= tol &&
         std::abs(c_ - other.c_) <= tol && std::abs(d_ - other.d_) <= tol;
}

MoebiusMap compose(const MoebiusMap& m1, const MoebiusMap& m2) {
  return MoebiusMap(MoebiusMap::Unchecked{},
                    m1.a_ * m2.a_ + m1.b_ * m2.c_,
                    m1.a_ * m2.b_ + m1.b_ * m2.d_,
                    m1.c_ * m2.a_ + m1.d_ * m2.c_,
                    m1.c_ * m2.b_ + m1.d_ * m2.d_);
}

std::ostream& operator<<(std::ostream& os, const MoebiusMap& m) {
  return os << "[[" << m.a_ << ", " << m.b_ << "], [" << m.c_ << ", " << m.d_ << "]]";
}

MapKind classify(const MoebiusMap& m, double tol) {
  const double t = std::abs(m.trace());
  if (t > 2.0 + tol) return MapKind::hyperbolic;
  if (std::abs(t - 2.0) <= tol) {
    return m.is_identity(tol) ? MapKind::identity : MapKind::parabolic;
  }
  return MapKind::elliptic;
}

double norm(const MoebiusMap& m) {
  if (classify(m) != MapKind::hyperbolic) throw std::domain_error("norm: map is not hyperbolic");
  const double t = std::abs(m.trace());
  const double root = (t + std::sqrt(t * t - 4.0)) / 2.0;
  return root * root;
}

std::optional<double> parabolic_fixed_point(const MoebiusMap& m) {
  if (classify(m) != MapKind::parabolic) {
    throw std::domain_error("parabolic_fixed_point: map is not parabolic");
  }
  if (std::abs(m.c()) <= kTraceTol) return std::nullopt;
  return (m.a() - m.d()) / (2.0 * m.c());
}

}  // namespace pmod
