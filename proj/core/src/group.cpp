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

#include "pmod/group.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace pmod {

int FreeFuchsianGroup::shell_period() const {
  std::size_t period = 1;
  for (const GroupWord& w : cusp_words) period = std::max(period, w.length());
  return static_cast<int>(period);
}

MoebiusMap FreeFuchsianGroup::letter_map(const Letter& x) const {
  if (x.generator < 0 || x.generator >= rank()) {
    throw std::out_of_range("generator index " + std::to_string(x.generator) + " out of range");
  }
  const MoebiusMap& m = generators[x.generator];
  return x.exponent > 0 ? m : m.inverse();
}

MoebiusMap FreeFuchsianGroup::evaluate(const GroupWord& w) const {
  MoebiusMap out;
  for (const Letter& x : w.letters()) out = out * letter_map(x);
  return out;
}

void FreeFuchsianGroup::check_cusp_index(int cusp_index) const {
  if (cusp_index < 1 || cusp_index > n_cusps()) {
    throw std::out_of_range("cusp index " + std::to_string(cusp_index) + " outside 1.." +
                            std::to_string(n_cusps()));
  }
}

MoebiusMap FreeFuchsianGroup::cusp_element(int cusp_index) const {
  check_cusp_index(cusp_index);
  return evaluate(cusp_words[cusp_index - 1]);
}

const MoebiusMap& FreeFuchsianGroup::cusp_scaling(int cusp_index) const {
  check_cusp_index(cusp_index);
  return cusp_scalings[cusp_index - 1];
}

MoebiusMap cusp_scaling_for(const MoebiusMap& parabolic) {
  const auto fixed = parabolic_fixed_point(parabolic);
  if (!fixed) {
    // P = [[1, h], [0, 1]] up to sign; conjugate by a dilation.
    const double h = std::abs(parabolic.b() / parabolic.d());
    return MoebiusMap::dilation(h);
  }
  const double x = *fixed;
  const MoebiusMap base(x, -1.0, 1.0, 0.0);
  const MoebiusMap conj = base.inverse() * parabolic * base;
  const double h = std::abs(conj.b() / conj.d());
  if (!(h > 0.0)) throw std::invalid_argument("cusp_scaling_for: degenerate translation length");
  const double s = std::sqrt(h);
  return MoebiusMap(x * s, -1.0 / s, s, 0.0);
}

FreeFuchsianGroup make_group(int genus, std::vector<MoebiusMap> generators,
                             std::vector<GroupWord> cusp_words, std::vector<std::string> names) {
  if (genus < 0) throw std::invalid_argument("make_group: genus must be >= 0");
  if (cusp_words.empty()) throw std::invalid_argument("make_group: at least one cusp is required");
  const int n = static_cast<int>(cusp_words.size());
  const int expected_rank = 2 * genus + n - 1;
  if (static_cast<int>(generators.size()) != expected_rank) {
    std::ostringstream msg;
    msg << "make_group: expected " << expected_rank << " generators for genus " << genus << " with "
        << n << " cusps, got " << generators.size();
    throw std::invalid_argument(msg.str());
  }
  if (names.empty()) {
    for (int i = 0; i < expected_rank; ++i) names.push_back(default_generator_name(i));
  }
  if (static_cast<int>(names.size()) != expected_rank) {
    throw std::invalid_argument("make_group: one name per generator is required");
  }

  FreeFuchsianGroup g;
  g.genus = genus;
  g.generators = std::move(generators);
  g.names = std::move(names);
  g.cusp_words = std::move(cusp_words);
  for (int i = 0; i < n; ++i) {
    const GroupWord& w = g.cusp_words[i];
    for (const Letter& x : w.letters()) {
      if (x.generator >= expected_rank) {
        throw std::invalid_argument("make_group: cusp word uses unknown generator");
      }
    }
    const MoebiusMap s = g.evaluate(w);
    if (std::abs(std::abs(s.trace()) - 2.0) > kTraceTol || s.is_identity()) {
      std::ostringstream msg;
      msg << "make_group: cusp word " << (i + 1) << " evaluates to " << s << ", not parabolic";
      throw std::invalid_argument(msg.str());
    }
    const MoebiusMap sigma = cusp_scaling_for(s);
    const MoebiusMap normalized = sigma.inverse() * s * sigma;
    const bool unit = normalized.approx_equal(MoebiusMap::translation(1.0)) ||
                      normalized.approx_equal(MoebiusMap::translation(-1.0));
    if (!unit) throw std::invalid_argument("make_group: cusp scaling failed to normalize cusp word");
    g.cusp_scalings.push_back(sigma);
  }
  return g;
}

FreeFuchsianGroup punctured_torus_group() {
  const MoebiusMap a(1.0, 1.0, 1.0, 2.0);
  const MoebiusMap b(1.0, -1.0, -1.0, 2.0);
  const GroupWord commutator({{0, 1}, {1, 1}, {0, -1}, {1, -1}});
  return make_group(1, {a, b}, {commutator}, {"A", "B"});
}

std::uint64_t reduced_word_count(int rank, int max_len) {
  if (rank < 0 || max_len < 0) throw std::invalid_argument("reduced_word_count: negative argument");
  std::uint64_t total = 1;
  std::uint64_t layer = 2ULL * rank;
  for (int len = 1; len <= max_len; ++len) {
    total += layer;
    layer *= (2ULL * rank - 1);
  }
  return total;
}

namespace {

std::vector<Letter> alphabet(int rank) {
  std::vector<Letter> out;
  for (int i = 0; i < rank; ++i) {
    out.push_back({i, 1});
    out.push_back({i, -1});
  }
  return out;
}

}  // namespace

void for_each_word(const FreeFuchsianGroup& g, int max_len,
                   const std::function<void(const GroupWord&, const MoebiusMap&)>& visit) {
  if (max_len < 0) throw std::invalid_argument("for_each_word: max_len must be >= 0");
  const auto letters = alphabet(g.rank());
  std::vector<MoebiusMap> letter_maps;
  for (const Letter& x : letters) letter_maps.push_back(g.letter_map(x));

  std::vector<WordEntry> layer{{GroupWord(), MoebiusMap::identity()}};
  visit(layer.front().word, layer.front().map);
  for (int len = 1; len <= max_len; ++len) {
    std::vector<WordEntry> next;
    next.reserve(layer.size() * std::max<std::size_t>(1, letters.size() - 1));
    for (const WordEntry& entry : layer) {
      const auto word = entry.word.letters();
      for (std::size_t j = 0; j < letters.size(); ++j) {
        if (!word.empty() && word.back().cancels(letters[j])) continue;
        std::vector<Letter> extended(word.begin(), word.end());
        extended.push_back(letters[j]);
        next.push_back({GroupWord(std::move(extended)), entry.map * letter_maps[j]});
        visit(next.back().word, next.back().map);
      }
    }
    layer = std::move(next);
  }
}

std::vector<WordEntry> enumerate_words(const FreeFuchsianGroup& g, int max_len) {
  std::vector<WordEntry> out;
  for_each_word(g, max_len, [&](const GroupWord& w, const MoebiusMap& m) { out.push_back({w, m}); });
  return out;
}

namespace {

struct ClassSearch {
  const std::vector<Letter>& letters;
  const std::vector<MoebiusMap>& maps;
  std::vector<ConjClass>& out;
  std::vector<Letter> word;
  std::vector<MoebiusMap> prefix;  // prefix[i] = product of first i letters
  std::size_t target = 0;

  void extend() {
    if (word.size() == target) {
      finish();
      return;
    }
    for (std::size_t j = 0; j < letters.size(); ++j) {
      const Letter& x = letters[j];
      if (!word.empty() && (word.back().cancels(x) || x < word.front())) continue;
      word.push_back(x);
      prefix.push_back(prefix.back() * maps[j]);
      extend();
      word.pop_back();
      prefix.pop_back();
    }
  }

  void finish() {
    if (word.size() > 1 && word.back().cancels(word.front())) return;
    if (!is_least_rotation(word)) return;
    const MoebiusMap& m = prefix.back();
    switch (classify(m)) {
      case MapKind::parabolic:
        return;
      case MapKind::identity:
      case MapKind::elliptic: {
        std::ostringstream msg;
        msg << "primitive_classes: word " << GroupWord(word).to_string() << " evaluates to "
            << to_string(classify(m)) << " element " << m << "; generators do not define a "
            << "torsion-free free group";
        throw std::domain_error(msg.str());
      }
      case MapKind::hyperbolic:
        break;
    }
    out.push_back({GroupWord(word), m, norm(m), cyclic_period(word) == word.size()});
  }
};

}  // namespace

std::vector<ConjClass> primitive_classes(const FreeFuchsianGroup& g, int max_len) {
  if (max_len < 0) throw std::invalid_argument("primitive_classes: max_len must be >= 0");
  const auto letters = alphabet(g.rank());
  std::vector<MoebiusMap> maps;
  for (const Letter& x : letters) maps.push_back(g.letter_map(x));

  std::vector<ConjClass> out;
  for (int len = 1; len <= max_len; ++len) {
    ClassSearch search{letters, maps, out, {}, {MoebiusMap::identity()},
                       static_cast<std::size_t>(len)};
    search.extend();
  }
  return out;
}

namespace {

// Bottom row (c, d) up to sign, first nonzero entry positive.
std::pair<double, double> coset_key(const MoebiusMap& scaled) {
  double c = scaled.c();
  double d = scaled.d();
  if (c < -kTraceTol || (std::abs(c) <= kTraceTol && d < 0.0)) {
    c = -c;
    d = -d;
  }
  return {c, d};
}

struct CellHash {
  std::size_t operator()(const std::pair<std::int64_t, std::int64_t>& cell) const {
    return std::hash<std::int64_t>()(cell.first * 1000003 ^ cell.second);
  }
};

}  // namespace

std::vector<CosetRep> coset_reps(const FreeFuchsianGroup& g, int cusp_index, int max_len) {
  g.check_cusp_index(cusp_index);
  if (max_len < 0) throw std::invalid_argument("coset_reps: max_len must be >= 0");
  const MoebiusMap sigma_inv = g.cusp_scaling(cusp_index).inverse();

  // Keys are bucketed on a grid much coarser than the comparison tolerance;
  // lookups scan the neighbouring cells so that bucket boundaries do not matter.
  constexpr double kCell = 1e-6;
  using Cell = std::pair<std::int64_t, std::int64_t>;
  std::unordered_map<Cell, std::vector<std::size_t>, CellHash> buckets;
  std::vector<std::pair<double, double>> keys;
  std::vector<CosetRep> out;

  for_each_word(g, max_len, [&](const GroupWord& w, const MoebiusMap& m) {
    const MoebiusMap scaled = sigma_inv * m;
    const auto key = coset_key(scaled);
    const Cell cell{std::llround(key.first / kCell), std::llround(key.second / kCell)};
    const double tol = kTraceTol * std::max({1.0, std::abs(key.first), std::abs(key.second)});
    for (std::int64_t dc = -1; dc <= 1; ++dc) {
      for (std::int64_t dd = -1; dd <= 1; ++dd) {
        const auto it = buckets.find({cell.first + dc, cell.second + dd});
        if (it == buckets.end()) continue;
        for (std::size_t idx : it->second) {
          if (std::abs(keys[idx].first - key.first) <= tol &&
              std::abs(keys[idx].second - key.second) <= tol) {
            return;
          }
        }
      }
    }
    buckets[cell].push_back(keys.size());
    keys.push_back(key);
    out.push_back({w, m, scaled});
  });
  return out;
}

}  // namespace pmod
