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

#include "pmod/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace pmod {

GroupWord::GroupWord(std::vector<Letter> letters) {
  letters_.reserve(letters.size());
  for (const Letter& x : letters) {
    if (x.exponent != 1 && x.exponent != -1) {
      throw std::invalid_argument("GroupWord: exponent must be +1 or -1");
    }
    if (x.generator < 0) throw std::invalid_argument("GroupWord: negative generator index");
    if (!letters_.empty() && letters_.back().cancels(x)) {
      letters_.pop_back();
    } else {
      letters_.push_back(x);
    }
  }
}

GroupWord GroupWord::generator(int index, int exponent) {
  return GroupWord({Letter{index, exponent}});
}

GroupWord GroupWord::inverse() const {
  GroupWord out;
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.letters_.push_back(it->inverse());
  return out;
}

GroupWord GroupWord::power(int n) const {
  const GroupWord base = n < 0 ? inverse() : *this;
  GroupWord out;
  for (int i = 0; i < std::abs(n); ++i) out = out * base;
  return out;
}

GroupWord operator*(const GroupWord& x, const GroupWord& y) {
  std::vector<Letter> joined(x.letters_);
  joined.insert(joined.end(), y.letters_.begin(), y.letters_.end());
  return GroupWord(std::move(joined));
}

std::string default_generator_name(int index) {
  if (index < 26) return std::string(1, static_cast<char>('A' + index));
  return "G" + std::to_string(index);
}

std::string GroupWord::to_string(std::span<const std::string> names) const {
  if (letters_.empty()) return "1";
  std::string out;
  for (const Letter& x : letters_) {
    if (!out.empty()) out += ' ';
    out += x.generator < static_cast<int>(names.size()) ? names[x.generator]
                                                        : default_generator_name(x.generator);
    if (x.exponent < 0) out += "^-1";
  }
  return out;
}

GroupWord cyclic_reduction(const GroupWord& w) {
  const auto letters = w.letters();
  std::size_t lo = 0;
  std::size_t hi = letters.size();
  while (hi - lo >= 2 && letters[lo].cancels(letters[hi - 1])) {
    ++lo;
    --hi;
  }
  return GroupWord(std::vector<Letter>(letters.begin() + lo, letters.begin() + hi));
}

bool is_least_rotation(std::span<const Letter> w) {
  const std::size_t n = w.size();
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      const Letter& rotated = w[(r + i) % n];
      if (rotated < w[i]) return false;
      if (w[i] < rotated) break;
    }
  }
  return true;
}

GroupWord canonical_cyclic_word(const GroupWord& w) {
  const GroupWord reduced = cyclic_reduction(w);
  const auto letters = reduced.letters();
  const std::size_t n = letters.size();
  std::size_t best = 0;
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      const Letter& cand = letters[(r + i) % n];
      const Letter& cur = letters[(best + i) % n];
      if (cand < cur) {
        best = r;
        break;
      }
      if (cur < cand) break;
    }
  }
  std::vector<Letter> rotated(n);
  for (std::size_t i = 0; i < n; ++i) rotated[i] = letters[(best + i) % n];
  return GroupWord(std::move(rotated));
}

std::size_t cyclic_period(std::span<const Letter> w) {
  const std::size_t n = w.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = p; i < n && periodic; ++i) periodic = w[i] == w[i - p];
    if (periodic) return p;
  }
  return n;
}

bool is_proper_power(const GroupWord& w) {
  const GroupWord reduced = cyclic_reduction(w);
  return !reduced.empty() && cyclic_period(reduced.letters()) < reduced.length();
}

}  // namespace pmod
