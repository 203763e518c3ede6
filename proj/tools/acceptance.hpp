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
#include <string>
#include <vector>

namespace pmod::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  double budget_seconds = 0.0;
  std::string detail;
};

inline constexpr int kCriterionCount = 8;
inline constexpr std::uint64_t kDefaultSeed = 20261016;

/// Runs criterion id in [1, kCriterionCount]; the runtime budget is part of the verdict.
CriterionResult run_criterion(int id, std::uint64_t seed = kDefaultSeed);

std::vector<CriterionResult> run_all(std::uint64_t seed = kDefaultSeed);

/// "PASS [3] name (0.01 s): detail"
std::string format_line(const CriterionResult& r);

}  // namespace pmod::acceptance
