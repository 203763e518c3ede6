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

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace pmod {

/// A generator or its inverse.
struct Letter {
  int generator = 0;
  int exponent = 1;  // +1 or -1

  Letter inverse() const { return {generator, -exponent}; }
  bool cancels(const Letter& other) const {
    return generator == other.generator && exponent == -other.exponent;
  }
  /// Position in the alphabet order: generator ascending, +1 before -1.
  int ordinal() const { return 2 * generator + (exponent < 0 ? 1 : 0); }

  friend bool operator==(const Letter&, const Letter&) = default;
  friend std::strong_ordering operator<=>(const Letter& x, const Letter& y) {
    return x.ordinal() <=> y.ordinal();
  }
};

/// A freely reduced word in the generators of a free group.
class GroupWord {
 public:
  GroupWord() = default;
  /// Freely reduces the input. Throws std::invalid_argument on a bad exponent.
  explicit GroupWord(std::vector<Letter> letters);

  static GroupWord generator(int index, int exponent = 1);

  std::span<const Letter> letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  GroupWord inverse() const;
  GroupWord power(int n) const;

  /// Concatenation followed by free reduction.
  friend GroupWord operator*(const GroupWord& x, const GroupWord& y);

  friend bool operator==(const GroupWord&, const GroupWord&) = default;
  /// Lexicographic order on letters (not shortlex).
  friend std::strong_ordering operator<=>(const GroupWord& x, const GroupWord& y) {
    return std::lexicographical_compare_three_way(x.letters_.begin(), x.letters_.end(),
                                                  y.letters_.begin(), y.letters_.end());
  }

  /// Renders e.g. "A B a^-1"; default names are A, B, C, ...
  std::string to_string(std::span<const std::string> names = {}) const;

 private:
  std::vector<Letter> letters_;
};

/// Default generator name for index i: A, B, ..., Z, G26, G27, ...
std::string default_generator_name(int index);

/// Strips cancelling first/last letter pairs (and free reduction).
GroupWord cyclic_reduction(const GroupWord& w);

/// Lexicographically least rotation of the cyclic reduction of w; an invariant
/// of the conjugacy class of w in the free group.
GroupWord canonical_cyclic_word(const GroupWord& w);

/// True iff w is a cyclically reduced word equal to its own least rotation.
bool is_least_rotation(std::span<const Letter> w);

/// Smallest p such that w is (w[0..p))^(|w|/p). Primitive iff period == length.
std::size_t cyclic_period(std::span<const Letter> w);

/// True if the cyclic reduction of w is a proper power of a shorter word.
bool is_proper_power(const GroupWord& w);

}  // namespace pmod
