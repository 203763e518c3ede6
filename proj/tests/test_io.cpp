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

#include <cstdio>
#include <fstream>
#include <string>

#include <gtest/gtest.h>

#include "pmod/io.hpp"

namespace {

TEST(ParseGroup, PuncturedTorusRoundTrip) {
  const auto g = pmod::parse_group(R"({"genus": 1,
    "generators": [[[1, 1], [1, 2]], [[1, -1], [-1, 2]]],
    "names": ["A", "B"],
    "cusp_words": [[["A", 1], ["B", 1], ["A", -1], ["B", -1]]]})");
  const auto ref = pmod::load_group(std::string(pmod::kPuncturedTorusName));
  EXPECT_EQ(g.rank(), ref.rank());
  EXPECT_EQ(g.shell_period(), 4);
  EXPECT_EQ(pmod::primitive_classes(g, 4).size(), pmod::primitive_classes(ref, 4).size());
}

TEST(ParseGroup, IndexLettersAndDefaultNames) {
  const auto g = pmod::parse_group(R"({"genus": 1,
    "generators": [[[1, 1], [1, 2]], [[1, -1], [-1, 2]]],
    "cusp_words": [[[0, 1], [1, 1], [0, -1], [1, -1]]]})");
  EXPECT_EQ(g.rank(), 2);
}

TEST(ParseGroup, Errors) {
  EXPECT_THROW(pmod::parse_group("{"), std::invalid_argument);
  EXPECT_THROW(pmod::parse_group(R"({"genus": 1})"), std::invalid_argument);
  EXPECT_THROW(pmod::parse_group(R"({"genus": 1, "generators": [[[1, 1], [1, 1]]], "cusp_words": []})"),
               std::invalid_argument);
  EXPECT_THROW(pmod::parse_group(R"({"genus": 1,
    "generators": [[[1, 1], [1, 2]], [[1, -1], [-1, 2]]],
    "cusp_words": [[["Q", 1]]]})"),
               std::invalid_argument);
  EXPECT_THROW(pmod::load_group("/nonexistent/group.json"), std::invalid_argument);
}

TEST(ParseCusps, RationalAndDecimal) {
  const auto cusps = pmod::parse_cusps(R"([{"weights": [["1/4", 1], [0.75, 1]]}])");
  ASSERT_EQ(cusps.size(), 1u);
  ASSERT_EQ(cusps[0].levels(), 2);
  EXPECT_TRUE(cusps[0].blocks[0].alpha.is_exact());
  EXPECT_FALSE(cusps[0].blocks[1].alpha.is_exact());
  EXPECT_DOUBLE_EQ(cusps[0].blocks[1].alpha.value(), 0.75);
  EXPECT_THROW(pmod::parse_cusps(R"([{"weights": [["3/4", 1], ["1/4", 1]]}])"), std::invalid_argument);
  EXPECT_THROW(pmod::parse_cusps(R"([{"weights": [["x", 1]]}])"), std::invalid_argument);
  EXPECT_THROW(pmod::parse_cusps(R"([{"weights": [[1.5, 1]]}])"), std::invalid_argument);
}

TEST(ParseParabolicData, Validation) {
  const auto d = pmod::parse_parabolic_data(
      R"({"genus": 1, "rank": 2, "degree": -1, "cusps": [{"weights": [["1/4", 1], ["3/4", 1]]}]})");
  EXPECT_EQ(d.genus, 1);
  EXPECT_EQ(d.rank, 2);
  EXPECT_EQ(d.degree, -1);
  EXPECT_THROW(pmod::parse_parabolic_data(R"({"genus": 1, "rank": 3, "degree": 0,
      "cusps": [{"weights": [["1/4", 1], ["3/4", 1]]}]})"),
               std::invalid_argument);
  EXPECT_THROW(pmod::parse_parabolic_data(R"({"genus": 0, "rank": 1, "degree": 0, "cusps": []})"),
               std::invalid_argument);
}

TEST(ParseRep, ComplexEntries) {
  const auto rho = pmod::parse_rep(R"({"rank": 2, "images": [
      [[[0, 1], 0], [0, [0, -1]]],
      [[0, 1], [-1, 0]]]})");
  EXPECT_EQ(rho.rank(), 2);
  EXPECT_NEAR(std::abs(rho.image(0)(0, 0) - std::complex<double>(0, 1)), 0.0, 1e-15);
  EXPECT_THROW(pmod::parse_rep(R"({"rank": 2, "images": [[[1, 0]]]})"), std::invalid_argument);
  // A non-unitary image is rejected.
  EXPECT_THROW(pmod::parse_rep(R"({"rank": 1, "images": [[[2]], [[1]]]})"), std::invalid_argument);
}

TEST(ReadTextFile, RoundTrip) {
  const std::string path = testing::TempDir() + "pmod_io_test.json";
  {
    std::ofstream f(path);
    f << R"({"rank": 1, "images": [[[1]], [[[0, 1]]]]})";
  }
  const auto rho = pmod::parse_rep(pmod::read_text_file(path));
  EXPECT_EQ(rho.rank(), 1);
  std::remove(path.c_str());
}

}  // namespace
