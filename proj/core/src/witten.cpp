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

#include "pmod/witten.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "pmod/parallel.hpp"

namespace pmod {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Rational binomial(int n, int k) {
  Rational b(1);
  for (int j = 1; j <= k; ++j) b = b * Rational(n - k + j, j);
  return b;
}

const std::vector<Rational>& bernoulli_table() {
  static const std::vector<Rational> table = [] {
    std::vector<Rational> b{Rational(1)};
    for (int n = 1; n <= kMaxBernoulliOrder; ++n) {
      Rational sum(0);
      for (int k = 0; k < n; ++k) sum += binomial(n + 1, k) * b[static_cast<std::size_t>(k)];
      b.push_back(-sum / Rational(n + 1));
    }
    return b;
  }();
  return table;
}

double fractional_part(double x) {
  const double f = x - std::floor(x);
  return f >= 1.0 ? 0.0 : f;
}

bool near_integer(double x) { return std::abs(x - std::round(x)) <= 1e-15 * std::max(1.0, std::abs(x)); }

// Signs and phases sum_i eps_i alpha_i over eps with eps_1 = +1.
struct SignPattern {
  double sign;
  double phase;
};

std::vector<SignPattern> sign_patterns(std::span<const double> alphas) {
  const std::size_t n = alphas.size();
  std::vector<SignPattern> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    double sign = 1.0;
    double phase = alphas[0];
    for (std::size_t i = 1; i < n; ++i) {
      const bool minus = (mask >> (i - 1)) & 1U;
      sign *= minus ? -1.0 : 1.0;
      phase += minus ? -alphas[i] : alphas[i];
    }
    out.push_back({sign, phase});
  }
  return out;
}

double sine_product(std::span<const double> alphas, std::int64_t m) {
  double prod = 1.0;
  for (double a : alphas) prod *= std::sin(kTwoPi * std::fmod(a * static_cast<double>(m), 1.0));
  return prod;
}

}  // namespace

Rational bernoulli_number(int n) {
  if (n < 0 || n > kMaxBernoulliOrder) {
    throw std::domain_error("bernoulli_number: order " + std::to_string(n) + " outside [0, " +
                            std::to_string(kMaxBernoulliOrder) + "]");
  }
  return bernoulli_table()[static_cast<std::size_t>(n)];
}

std::vector<Rational> bernoulli_polynomial(int p) {
  std::vector<Rational> coeffs;
  for (int j = 0; j <= p; ++j) coeffs.push_back(binomial(p, j) * bernoulli_number(p - j));
  return coeffs;
}

double bernoulli_series(int p, double x) {
  if (p < 1) throw std::invalid_argument("bernoulli_series: p must be >= 1");
  if (!std::isfinite(x)) throw std::invalid_argument("bernoulli_series: x must be finite");
  if (p == 1 && near_integer(x)) {
    throw std::invalid_argument("bernoulli_series: the p = 1 series is not summable at integer x");
  }
  const double f = fractional_part(x);
  const auto coeffs = bernoulli_polynomial(p);
  double bp = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) bp = bp * f + to_double(*it);
  double factorial = 1.0;
  for (int j = 2; j <= p; ++j) factorial *= j;
  const int half = p % 2 == 1 ? (p + 1) / 2 : p / 2 - 1;
  const double sign = half % 2 == 0 ? 1.0 : -1.0;
  return sign * std::pow(kTwoPi, p) * bp / (2.0 * factorial);
}

WittenVolume witten_volume(int genus, std::span<const double> alphas, const WittenOptions& options) {
  const int n = static_cast<int>(alphas.size());
  if (genus < 0) throw std::invalid_argument("witten_volume: genus must be >= 0");
  if (n < 1) throw std::invalid_argument("witten_volume: at least one marked point is required");
  if (n > 20) throw std::invalid_argument("witten_volume: at most 20 marked points are supported");
  for (double a : alphas) {
    if (!(a > 0.0 && a < 0.5)) throw std::invalid_argument("witten_volume: every alpha must lie in (0, 1/2)");
  }
  const int p = 2 * genus - 2 + n;
  if (p < 1) throw std::invalid_argument("witten_volume: 2g - 2 + n must be >= 1");

  WittenVolume out;
  out.p = p;
  const double prefactor = std::pow(2.0, 2 * genus - 1 + n) * std::pow(std::numbers::pi, 4 * genus - 4 + n);
  const auto patterns = sign_patterns(alphas);
  // prod sin = 2^(1-n) (-1)^floor(n/2) sum_{eps_1=+} (prod eps) {sin or cos}(2 pi m phase).
  const double expansion = std::pow(2.0, 1 - n) * ((n / 2) % 2 == 0 ? 1.0 : -1.0);

  if (p <= kMaxBernoulliOrder) {
    double sum = 0.0;
    for (const SignPattern& s : patterns) {
      if (p == 1 && near_integer(s.phase)) continue;  // sin(2 pi m k) = 0
      sum += s.sign * bernoulli_series(p, s.phase);
    }
    out.exact = prefactor * expansion * sum;
  }
  if (options.exact_only) return out;

  TruncatedValue<double> numeric;
  const double roundoff_terms = [&](std::int64_t m) {
    return static_cast<double>(m) + kTwoPi * n * (1.0 + std::log(static_cast<double>(m)));
  }(p == 1 ? options.abel_terms : options.terms);
  if (p >= 2) {
    const std::int64_t m_max = options.terms;
    if (m_max < 1) throw std::invalid_argument("witten_volume: terms must be >= 1");
    const double sum = ordered_block_sum<double>(1, m_max + 1, [&](std::int64_t m) {
      return sine_product(alphas, m) / std::pow(static_cast<double>(m), p);
    });
    numeric.value = prefactor * sum;
    numeric.cutoff = {"terms", m_max, m_max};
    numeric.tail_estimate = prefactor * (std::pow(static_cast<double>(m_max), 1 - p) / (p - 1) +
                                         DBL_EPSILON * roundoff_terms);
  } else {
    const double r = options.abel_radius;
    const std::int64_t m_max = options.abel_terms;
    if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("witten_volume: abel_radius must lie in (0, 1)");
    if (m_max < 1) throw std::invalid_argument("witten_volume: abel_terms must be >= 1");
    const double log_r = std::log(r);
    const double sum = ordered_block_sum<double>(1, m_max + 1, [&](std::int64_t m) {
      const double md = static_cast<double>(m);
      return std::exp(md * log_r) * sine_product(alphas, m) / md;
    });
    // |A(1) - A(r)| <= (1 - r) / min_{t in [r, 1]} |1 - t e^(i theta)| per harmonic.
    double bias = 0.0;
    for (const SignPattern& s : patterns) {
      if (near_integer(s.phase)) continue;
      const double c = std::cos(kTwoPi * s.phase);
      const double t = std::clamp(c, r, 1.0);
      bias += (1.0 - r) / std::sqrt(1.0 - 2.0 * t * c + t * t);
    }
    const double truncation =
        std::exp(static_cast<double>(m_max + 1) * log_r) / (static_cast<double>(m_max + 1) * (1.0 - r));
    numeric.value = prefactor * sum;
    numeric.cutoff = {"abel_terms", m_max, m_max};
    numeric.tail_estimate = prefactor * (std::abs(expansion) * bias + truncation + DBL_EPSILON * roundoff_terms);
  }
  out.numeric = numeric;
  return out;
}

}  // namespace pmod
