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

#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = pmod::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kTorusCusps = R"([{"weights": [["1/4", 1], ["3/4", 1]]}])";

TEST(Cli, Dim) {
  const auto r = run({"dim", "--genus", "1", "--rank", "2", "--degree", "-1", "--cusps", kTorusCusps});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["d"], 2);
  EXPECT_EQ(j["d0"], 1);
}

TEST(Cli, DefectReducedAsChern) {
  const auto r = run({"defect", "--genus", "1", "--rank", "2", "--degree", "-1", "--cusps",
                      R"([{"weights": [["1/10", 1], ["9/10", 1]]}])", "--reduce", "--as-chern"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(std::abs(j["coefficients"]["1.1"].get<double>()), 2 * 0.6, 1e-14);
  EXPECT_FALSE(j.contains("warnings"));
}

TEST(Cli, VolumeTorus) {
  const auto r = run({"volume", "--genus", "1", "--alphas", "1/4", "--exact-only"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["exact"].get<double>(), 9.869604401089358, 1e-12);
}

TEST(Cli, VolumeFromChern) {
  const auto r = run({"volume-from-chern", "--alpha", "1/4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["volume"].get<double>(), 9.869604401089358, 1e-12);
  EXPECT_EQ(j["ledger"]["lambda_0"], -2);
  EXPECT_EQ(j["ledger"]["lambda_1.2"], -1);
}

TEST(Cli, ZetaEmptyTruncation) {
  const auto r = run({"zeta", "--s", "2", "--max-word-len", "0"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["log_Z"].get<double>(), 0.0);
}

TEST(Cli, ZetaFrozen) {
  const auto r = run({"zeta", "--s", "2", "--max-word-len", "8"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["log_Z"].get<double>(), -0.159252964271884, 1e-12);
  EXPECT_GT(j["tail_estimate"].get<double>(), 0.0);
}

TEST(Cli, RepCheck) {
  const auto r = run({"rep-check", "--rep", "su2:alpha=1/4", "--genus", "1", "--rank", "2", "--degree", "0",
                      "--cusps", kTorusCusps});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["admissible"].get<bool>());
  EXPECT_TRUE(j["irreducible"].get<bool>());
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args{"classes", "--max-len", "4"};
  const auto a = run(args);
  const auto b = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, InvalidInputExitsTwo) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"bogus"},
           {"dim", "--genus", "1"},
           {"dim", "--genus", "1", "--rank", "2", "--degree", "0", "--cusps", "[{"},
           {"volume", "--genus", "1", "--alphas", "0.5"},
           {"zeta", "--s", "0.5", "--max-word-len", "2"},
           {"eisenstein", "--cusp", "3", "--z", "0.1,1", "--coset-len", "2"}}) {
    const auto r = run(args);
    EXPECT_EQ(r.code, 2) << (args.empty() ? "" : args[0]);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_TRUE(j.contains("error"));
  }
}

TEST(Cli, SelftestSingleCriterion) {
  const auto r = run({"selftest", "--only", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("PASS [2]"), std::string::npos);
}

}  // namespace
