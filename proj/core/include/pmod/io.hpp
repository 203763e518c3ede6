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

#include <string>
#include <string_view>
#include <vector>

#include "pmod/group.hpp"
#include "pmod/parabolic.hpp"
#include "pmod/reps.hpp"

namespace pmod {

/// Name under which punctured_torus_group() is addressable.
inline constexpr std::string_view kPuncturedTorusName = "punctured-torus";

/// Whole file contents. Throws std::invalid_argument when the file cannot be read.
std::string read_text_file(const std::string& path);

/**
 * Group description:
 *   {"genus": 1,
 *    "generators": [[[1, 1], [1, 2]], [[1, -1], [-1, 2]]],
 *    "names": ["A", "B"],
 *    "cusp_words": [[["A", 1], ["B", 1], ["A", -1], ["B", -1]]]}
 * "names" is optional and defaults to A, B, C, ...; a letter may also name its
 * generator by 0-based index. All parse and validation errors surface as
 * std::invalid_argument.
 */
FreeFuchsianGroup parse_group(std::string_view json_text);

/// The built-in group by name, or a group description file.
FreeFuchsianGroup load_group(const std::string& name_or_path);

/// [{"weights": [[alpha, mult], ...]}, ...] with alpha a number or a "p/q" string.
std::vector<CuspWeights> parse_cusps(std::string_view json_text);

/// {"genus": g, "rank": k, "degree": d, "cusps": [...]}.
ParabolicData parse_parabolic_data(std::string_view json_text);

/// {"rank": k, "images": [[[[re, im], ...], ...], ...]}, one k x k matrix per generator.
UnitaryRep parse_rep(std::string_view json_text);

}  // namespace pmod
