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

#include "pmod/parabolic.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace pmod {

double to_double(const Rational& q) {
  return static_cast<double>(q.numerator()) / static_cast<double>(q.denominator());
}

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

Weight Weight::exact(Rational q) {
  Weight w;
  w.rational_ = q;
  w.value_ = to_double(q);
  return w;
}

Weight Weight::approximate(double x) {
  Weight w;
  w.value_ = x;
  return w;
}

namespace {

std::int64_t parse_integer(std::string_view text) {
  std::int64_t value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Weight Weight::parse(std::string_view text) {
  text = trim(text);
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = parse_integer(trim(text.substr(0, slash)));
    const auto den = parse_integer(trim(text.substr(slash + 1)));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return exact(Rational(num, den));
  }
  if (text.find_first_of(".eE") == std::string_view::npos) return exact(Rational(parse_integer(text)));
  std::size_t used = 0;
  const std::string s(text);
  double x = 0.0;
  try {
    x = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw std::invalid_argument("not a number: '" + s + "'");
  return approximate(x);
}

std::string Weight::to_string() const {
  if (rational_) return pmod::to_string(*rational_);
  std::ostringstream os;
  os.precision(17);
  os << value_;
  return os.str();
}

int CuspWeights::rank() const {
  int k = 0;
  for (const auto& b : blocks) k += b.mult;
  return k;
}

CuspWeights make_cusp_weights(std::vector<WeightBlock> blocks) {
  if (blocks.empty()) throw std::invalid_argument("cusp weights: at least one block is required");
  for (std::size_t l = 0; l < blocks.size(); ++l) {
    const double a = blocks[l].alpha.value();
    if (!(a >= 0.0 && a < 1.0)) {
      throw std::invalid_argument("cusp weights: weight " + blocks[l].alpha.to_string() +
                                  " outside [0, 1)");
    }
    if (blocks[l].mult < 1) throw std::invalid_argument("cusp weights: multiplicity must be >= 1");
    if (l > 0) {
      const auto& prev = blocks[l - 1].alpha;
      const auto& cur = blocks[l].alpha;
      const bool increasing = (prev.is_exact() && cur.is_exact()) ? *prev.rational() < *cur.rational()
                                                                   : prev.value() < cur.value();
      if (!increasing) throw std::invalid_argument("cusp weights: weights must increase strictly");
    }
  }
  return CuspWeights{std::move(blocks)};
}

void validate(const ParabolicData& d) {
  const int n = static_cast<int>(d.cusps.size());
  if (d.genus < 0) throw std::invalid_argument("parabolic data: genus must be >= 0");
  if (d.rank < 1) throw std::invalid_argument("parabolic data: rank must be >= 1");
  if (n < 1) throw std::invalid_argument("parabolic data: at least one marked point is required");
  if (2 * d.genus + n - 2 <= 0) throw std::invalid_argument("parabolic data: 2g + n - 2 must be positive");
  for (int i = 0; i < n; ++i) {
    make_cusp_weights(d.cusps[i].blocks);
    if (d.cusps[i].rank() != d.rank) {
      std::ostringstream msg;
      msg << "parabolic data: multiplicities at cusp " << (i + 1) << " sum to " << d.cusps[i].rank()
          << ", expected rank " << d.rank;
      throw std::invalid_argument(msg.str());
    }
  }
}

ParabolicData make_parabolic_data(int genus, int rank, int degree, std::vector<CuspWeights> cusps) {
  ParabolicData d{genus, rank, degree, std::move(cusps)};
  validate(d);
  return d;
}

double parabolic_degree(const ParabolicData& d) {
  double total = d.degree;
  for (const auto& cusp : d.cusps) {
    for (const auto& b : cusp.blocks) total += b.mult * b.alpha.value();
  }
  return total;
}

bool is_integral(const ParabolicData& d, double tol) {
  for (const auto& cusp : d.cusps) {
    bool exact = true;
    for (const auto& b : cusp.blocks) exact = exact && b.alpha.is_exact();
    if (exact) {
      Rational sum(0);
      for (const auto& b : cusp.blocks) sum += Rational(b.mult) * *b.alpha.rational();
      if (sum.denominator() != 1) return false;
    } else {
      double sum = 0.0;
      for (const auto& b : cusp.blocks) sum += b.mult * b.alpha.value();
      if (std::abs(sum - std::round(sum)) > tol) return false;
    }
  }
  return true;
}

FlagDims flag_dims(const CuspWeights& c, int k) {
  if (c.rank() != k) {
    throw std::invalid_argument("flag_dims: multiplicities sum to " + std::to_string(c.rank()) +
                                ", expected " + std::to_string(k));
  }
  int dim_r = k * k;
  for (const auto& b : c.blocks) dim_r -= b.mult * b.mult;
  return {Rational(dim_r, 2), dim_r};
}

ModuliDims moduli_dims(const ParabolicData& d, bool require_d0) {
  validate(d);
  Rational total(d.rank * d.rank * (d.genus - 1) + 1);
  for (const auto& cusp : d.cusps) total += flag_dims(cusp, d.rank).dim_c;
  if (total.denominator() != 1) {
    throw std::invalid_argument("moduli_dims: half-integral dimension " + to_string(total));
  }
  ModuliDims out;
  out.d = static_cast<int>(total.numerator());
  if (is_integral(d)) {
    out.d0 = out.d - d.genus;
  } else if (require_d0) {
    throw std::invalid_argument("moduli_dims: d0 requires an integral parabolic structure");
  }
  return out;
}

int continuous_multiplicity(const ParabolicData& d) {
  validate(d);
  int direct = 0;
  int via_flags = static_cast<int>(d.cusps.size()) * d.rank * d.rank;
  for (const auto& cusp : d.cusps) {
    for (const auto& b : cusp.blocks) direct += b.mult * b.mult;
    via_flags -= flag_dims(cusp, d.rank).dim_r;
  }
  if (direct != via_flags) throw std::logic_error("continuous_multiplicity: expressions disagree");
  return direct;
}

}  // namespace pmod
