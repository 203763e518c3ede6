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
#include <functional>
#include <string>
#include <vector>

#include "pmod/moebius.hpp"
#include "pmod/words.hpp"

namespace pmod {

/**
 * A torsion-free Fuchsian group of a punctured surface, modelled as the free
 * group on explicit matrix generators.
 *
 * The cusp words are the parabolic generators S_1, ..., S_n written in the
 * free generators; cusp_scalings[i] is sigma_i with sigma_i(inf) the fixed
 * point of S_i and sigma_i^-1 S_i sigma_i = [[1, +-1], [0, 1]].
 */
struct FreeFuchsianGroup {
  int genus = 0;
  std::vector<MoebiusMap> generators;
  std::vector<std::string> names;
  std::vector<GroupWord> cusp_words;
  std::vector<MoebiusMap> cusp_scalings;

  int rank() const { return static_cast<int>(generators.size()); }
  int n_cusps() const { return static_cast<int>(cusp_words.size()); }
  /// Longest cusp word; word-length shells of cusp-adjacent sums repeat with this period.
  int shell_period() const;

  MoebiusMap letter_map(const Letter& x) const;
  MoebiusMap evaluate(const GroupWord& w) const;
  /// S_i for a 1-based cusp index.
  MoebiusMap cusp_element(int cusp_index) const;
  const MoebiusMap& cusp_scaling(int cusp_index) const;
  /// Throws std::out_of_range for an index outside 1..n_cusps.
  void check_cusp_index(int cusp_index) const;
};

/**
 * Builds a group and validates it: rank 2g + n - 1, every cusp word parabolic,
 * and the computed scalings conjugate each cusp word to a unit translation.
 * Throws std::invalid_argument on violation.
 */
FreeFuchsianGroup make_group(int genus, std::vector<MoebiusMap> generators,
                             std::vector<GroupWord> cusp_words,
                             std::vector<std::string> names = {});

/**
 * Scaling map sigma for a parabolic element P, normalized as
 * sigma = [[x s, -1/s], [s, 0]] for a finite fixed point x, and as a pure
 * dilation when the fixed point is infinity. s > 0 is chosen so that
 * sigma^-1 P sigma is a translation by +-1.
 */
MoebiusMap cusp_scaling_for(const MoebiusMap& parabolic);

/// <A, B> with A = [[1,1],[1,2]], B = [[1,-1],[-1,2]] and cusp word A B A^-1 B^-1.
FreeFuchsianGroup punctured_torus_group();

struct WordEntry {
  GroupWord word;
  MoebiusMap map;
};

/// Number of freely reduced words of length <= max_len in a free group of given rank.
std::uint64_t reduced_word_count(int rank, int max_len);

/**
 * Visits every freely reduced word of length <= max_len exactly once, breadth
 * first by length, then by generator index ascending with exponent +1 before -1.
 */
void for_each_word(const FreeFuchsianGroup& g, int max_len,
                   const std::function<void(const GroupWord&, const MoebiusMap&)>& visit);

std::vector<WordEntry> enumerate_words(const FreeFuchsianGroup& g, int max_len);

struct ConjClass {
  GroupWord cyclic_word;       // least rotation of a cyclically reduced word
  MoebiusMap representative;  // evaluation of cyclic_word
  double norm = 0.0;
  bool primitive = true;
};

/**
 * One entry per conjugacy class of hyperbolic elements with a cyclically
 * reduced representative of length in [1, max_len], ordered by (length,
 * cyclic word). Parabolic classes are skipped; an elliptic or trivial
 * evaluation of a nontrivial word throws std::domain_error.
 */
std::vector<ConjClass> primitive_classes(const FreeFuchsianGroup& g, int max_len);

struct CosetRep {
  GroupWord word;
  MoebiusMap map;
  MoebiusMap scaled;  // sigma_i^-1 * map
};

/**
 * Representatives of the left cosets <S_i> gamma among words of length <=
 * max_len; the first word met in enumeration order represents its coset, so
 * it is also a shortest one. Cosets are keyed by the bottom row of
 * sigma_i^-1 gamma up to sign.
 */
std::vector<CosetRep> coset_reps(const FreeFuchsianGroup& g, int cusp_index, int max_len);

}  // namespace pmod
