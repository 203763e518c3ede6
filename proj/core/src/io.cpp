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

#include "pmod/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace pmod {

namespace {

using nlohmann::json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

const json& field(const json& obj, const char* key) {
  if (!obj.is_object()) throw std::invalid_argument("expected a JSON object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw std::invalid_argument(std::string("missing field \"") + key + "\"");
  return *it;
}

template <class T>
T get_as(const json& j, const std::string& what) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    throw std::invalid_argument("invalid " + what + ": " + j.dump());
  }
}

int get_int(const json& j, const std::string& what) {
  if (!j.is_number_integer()) throw std::invalid_argument(what + " must be an integer");
  return get_as<int>(j, what);
}

Weight parse_weight(const json& j) {
  if (j.is_string()) return Weight::parse(j.get<std::string>());
  if (j.is_number_integer()) return Weight::exact(Rational(j.get<std::int64_t>()));
  if (j.is_number()) return Weight::approximate(j.get<double>());
  throw std::invalid_argument("weight must be a number or a \"p/q\" string: " + j.dump());
}

std::vector<CuspWeights> cusps_from(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("cusps must be an array");
  std::vector<CuspWeights> out;
  for (const json& cusp : j) {
    const json& weights = field(cusp, "weights");
    if (!weights.is_array()) throw std::invalid_argument("weights must be an array");
    std::vector<WeightBlock> blocks;
    for (const json& w : weights) {
      if (!w.is_array() || w.size() != 2) throw std::invalid_argument("each weight must be [alpha, mult]");
      blocks.push_back({parse_weight(w[0]), get_int(w[1], "multiplicity")});
    }
    out.push_back(make_cusp_weights(std::move(blocks)));
  }
  return out;
}

MoebiusMap matrix_from(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || !j[1].is_array() || j[0].size() != 2 ||
      j[1].size() != 2) {
    throw std::invalid_argument("generator must be a 2x2 matrix [[a, b], [c, d]]");
  }
  return MoebiusMap(get_as<double>(j[0][0], "entry"), get_as<double>(j[0][1], "entry"),
                    get_as<double>(j[1][0], "entry"), get_as<double>(j[1][1], "entry"));
}

GroupWord word_from(const json& j, const std::vector<std::string>& names) {
  if (!j.is_array()) throw std::invalid_argument("cusp word must be an array of [generator, exponent]");
  std::vector<Letter> letters;
  for (const json& x : j) {
    if (!x.is_array() || x.size() != 2) throw std::invalid_argument("letter must be [generator, exponent]");
    int index = -1;
    if (x[0].is_string()) {
      const auto name = x[0].get<std::string>();
      for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i] == name) index = static_cast<int>(i);
      }
      if (index < 0) throw std::invalid_argument("unknown generator name \"" + name + "\"");
    } else {
      index = get_int(x[0], "generator index");
      if (index < 0 || index >= static_cast<int>(names.size())) {
        throw std::invalid_argument("generator index out of range: " + std::to_string(index));
      }
    }
    letters.push_back({index, get_int(x[1], "exponent")});
  }
  return GroupWord(std::move(letters));
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

FreeFuchsianGroup parse_group(std::string_view json_text) {
  const json j = parse_json(json_text);
  const int genus = get_int(field(j, "genus"), "genus");
  const json& gens = field(j, "generators");
  if (!gens.is_array()) throw std::invalid_argument("generators must be an array");
  std::vector<MoebiusMap> generators;
  for (const json& m : gens) generators.push_back(matrix_from(m));

  std::vector<std::string> names;
  if (const auto it = j.find("names"); it != j.end()) {
    names = get_as<std::vector<std::string>>(*it, "names");
    if (names.size() != generators.size()) throw std::invalid_argument("names and generators differ in length");
  } else {
    for (std::size_t i = 0; i < generators.size(); ++i) names.push_back(default_generator_name(static_cast<int>(i)));
  }

  const json& words = field(j, "cusp_words");
  if (!words.is_array()) throw std::invalid_argument("cusp_words must be an array");
  std::vector<GroupWord> cusp_words;
  for (const json& w : words) cusp_words.push_back(word_from(w, names));
  return make_group(genus, std::move(generators), std::move(cusp_words), std::move(names));
}

FreeFuchsianGroup load_group(const std::string& name_or_path) {
  if (name_or_path == kPuncturedTorusName) return punctured_torus_group();
  return parse_group(read_text_file(name_or_path));
}

std::vector<CuspWeights> parse_cusps(std::string_view json_text) { return cusps_from(parse_json(json_text)); }

ParabolicData parse_parabolic_data(std::string_view json_text) {
  const json j = parse_json(json_text);
  return make_parabolic_data(get_int(field(j, "genus"), "genus"), get_int(field(j, "rank"), "rank"),
                             get_int(field(j, "degree"), "degree"), cusps_from(field(j, "cusps")));
}

UnitaryRep parse_rep(std::string_view json_text) {
  const json j = parse_json(json_text);
  const int k = get_int(field(j, "rank"), "rank");
  if (k < 1) throw std::invalid_argument("rank must be >= 1");
  const json& images = field(j, "images");
  if (!images.is_array()) throw std::invalid_argument("images must be an array");
  std::vector<CMatrix> mats;
  for (const json& img : images) {
    if (!img.is_array() || static_cast<int>(img.size()) != k) {
      throw std::invalid_argument("each image must have " + std::to_string(k) + " rows");
    }
    CMatrix m(k, k);
    for (int r = 0; r < k; ++r) {
      const json& row = img[static_cast<std::size_t>(r)];
      if (!row.is_array() || static_cast<int>(row.size()) != k) {
        throw std::invalid_argument("each image row must have " + std::to_string(k) + " entries");
      }
      for (int c = 0; c < k; ++c) {
        const json& z = row[static_cast<std::size_t>(c)];
        if (z.is_number()) {
          m(r, c) = z.get<double>();
        } else if (z.is_array() && z.size() == 2) {
          m(r, c) = {get_as<double>(z[0], "real part"), get_as<double>(z[1], "imaginary part")};
        } else {
          throw std::invalid_argument("matrix entry must be a number or [re, im]");
        }
      }
    }
    mats.push_back(std::move(m));
  }
  return UnitaryRep(k, std::move(mats));
}

}  // namespace pmod
