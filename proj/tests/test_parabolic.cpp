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

#include <random>

#include <gtest/gtest.h>

#include "pmod/parabolic.hpp"

namespace {

using pmod::CuspWeights;
using pmod::Rational;
using pmod::Weight;

Weight q(std::int64_t p, std::int64_t d) { return Weight::exact(Rational(p, d)); }

CuspWeights blocks(std::vector<pmod::WeightBlock> b) { return pmod::make_cusp_weights(std::move(b)); }

TEST(Weight, Parse) {
  const Weight a = Weight::parse("3/4");
  EXPECT_TRUE(a.is_exact());
  EXPECT_EQ(*a.rational(), Rational(3, 4));
  EXPECT_DOUBLE_EQ(a.value(), 0.75);
  EXPECT_TRUE(Weight::parse("0").is_exact());
  const Weight d = Weight::parse("0.3");
  EXPECT_FALSE(d.is_exact());
  EXPECT_DOUBLE_EQ(d.value(), 0.3);
  EXPECT_THROW(Weight::parse("x/2"), std::invalid_argument);
  EXPECT_THROW(Weight::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Weight::parse(""), std::invalid_argument);
}

TEST(CuspWeights, Validation) {
  EXPECT_THROW(blocks({{q(1, 2), 1}, {q(1, 4), 1}}), std::invalid_argument);
  EXPECT_THROW(blocks({{q(1, 2), 1}, {q(1, 2), 1}}), std::invalid_argument);
  EXPECT_THROW(blocks({{q(1, 1), 1}}), std::invalid_argument);
  EXPECT_THROW(blocks({{q(-1, 4), 1}}), std::invalid_argument);
  EXPECT_THROW(blocks({{q(1, 4), 0}}), std::invalid_argument);
  EXPECT_EQ(blocks({{q(1, 4), 2}, {q(1, 2), 3}}).rank(), 5);
}

TEST(ParabolicData, Validation) {
  EXPECT_THROW(pmod::make_parabolic_data(0, 1, 0, {blocks({{q(0, 1), 1}})}), std::invalid_argument);
  EXPECT_THROW(pmod::make_parabolic_data(1, 2, 0, {blocks({{q(0, 1), 1}})}), std::invalid_argument);
  EXPECT_NO_THROW(pmod::make_parabolic_data(0, 1, 0,
                                            {blocks({{q(0, 1), 1}}), blocks({{q(0, 1), 1}}), blocks({{q(0, 1), 1}})}));
}

TEST(ParabolicDegree, Examples) {
  const auto d1 = pmod::make_parabolic_data(1, 2, -1, {blocks({{Weight::approximate(0.3), 1}, {Weight::approximate(0.7), 1}})});
  EXPECT_NEAR(pmod::parabolic_degree(d1), 0.0, 1e-15);
  const auto d2 = pmod::make_parabolic_data(1, 2, 5, {blocks({{q(0, 1), 2}})});
  EXPECT_DOUBLE_EQ(pmod::parabolic_degree(d2), 5.0);
  const auto d3 = pmod::make_parabolic_data(1, 2, 0, {blocks({{q(1, 5), 1}, {q(4, 5), 1}})});
  EXPECT_DOUBLE_EQ(pmod::parabolic_degree(d3), 1.0);
}

TEST(ParabolicDegree, AdditiveInDegree) {
  const auto c = blocks({{q(1, 7), 1}, {q(3, 7), 2}});
  const double base = pmod::parabolic_degree(pmod::make_parabolic_data(2, 3, 0, {c}));
  for (int deg = -3; deg <= 3; ++deg) {
    EXPECT_NEAR(pmod::parabolic_degree(pmod::make_parabolic_data(2, 3, deg, {c})), base + deg, 1e-14);
  }
}

TEST(Integral, Examples) {
  EXPECT_TRUE(pmod::is_integral(pmod::make_parabolic_data(1, 2, 0, {blocks({{q(1, 3), 1}, {q(2, 3), 1}})})));
  EXPECT_FALSE(pmod::is_integral(
      pmod::make_parabolic_data(1, 2, 0, {blocks({{Weight::approximate(0.3), 1}, {Weight::approximate(0.6), 1}})})));
  EXPECT_TRUE(pmod::is_integral(pmod::make_parabolic_data(1, 3, 0, {blocks({{q(0, 1), 3}})})));
  // Decimal input is tested against the tolerance.
  EXPECT_TRUE(pmod::is_integral(
      pmod::make_parabolic_data(1, 2, 0, {blocks({{Weight::approximate(0.1), 1}, {Weight::approximate(0.9), 1}})})));
}

TEST(FlagDims, Examples) {
  const auto full2 = pmod::flag_dims(blocks({{q(1, 4), 1}, {q(3, 4), 1}}), 2);
  EXPECT_EQ(full2.dim_r, 2);
  EXPECT_EQ(full2.dim_c, Rational(1));
  EXPECT_EQ(pmod::flag_dims(blocks({{q(0, 1), 2}}), 2).dim_r, 0);
  const auto full3 = pmod::flag_dims(blocks({{q(0, 1), 1}, {q(1, 3), 1}, {q(2, 3), 1}}), 3);
  EXPECT_EQ(full3.dim_r, 6);
  EXPECT_EQ(full3.dim_c, Rational(3));
  EXPECT_THROW(pmod::flag_dims(blocks({{q(0, 1), 2}}), 3), std::invalid_argument);
}

TEST(ModuliDims, Examples) {
  const auto full = blocks({{q(1, 4), 1}, {q(3, 4), 1}});
  const auto torus = pmod::moduli_dims(pmod::make_parabolic_data(1, 2, -1, {full}), true);
  EXPECT_EQ(torus.d, 2);
  EXPECT_EQ(torus.d0, 1);
  const auto g2 = pmod::moduli_dims(pmod::make_parabolic_data(2, 2, -1, {full}), true);
  EXPECT_EQ(g2.d, 6);
  EXPECT_EQ(g2.d0, 4);
  const auto line = pmod::moduli_dims(pmod::make_parabolic_data(1, 1, 0, {blocks({{q(0, 1), 1}})}));
  EXPECT_EQ(line.d, 1);
}

TEST(ModuliDims, NonIntegralHasNoD0) {
  const auto d = pmod::make_parabolic_data(1, 2, 0, {blocks({{q(1, 5), 1}, {q(2, 5), 1}})});
  EXPECT_FALSE(pmod::moduli_dims(d).d0.has_value());
  EXPECT_THROW(pmod::moduli_dims(d, true), std::invalid_argument);
}

TEST(ContinuousMultiplicity, Examples) {
  EXPECT_EQ(pmod::continuous_multiplicity(pmod::make_parabolic_data(1, 2, 0, {blocks({{q(1, 4), 1}, {q(3, 4), 1}})})), 2);
  EXPECT_EQ(pmod::continuous_multiplicity(pmod::make_parabolic_data(1, 4, 0, {blocks({{q(0, 1), 4}})})), 16);
  EXPECT_EQ(pmod::continuous_multiplicity(pmod::make_parabolic_data(
                1, 3, 0, {blocks({{q(0, 1), 1}, {q(1, 2), 2}}), blocks({{q(1, 3), 3}})})),
            14);
}

TEST(ModuliDims, DifferenceIsGenus) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> genus(0, 5);
  std::uniform_int_distribution<int> rank(1, 5);
  for (int i = 0; i < 200; ++i) {
    const int g = genus(rng);
    const int k = rank(rng);
    std::vector<CuspWeights> cusps(3, blocks({{q(0, 1), k}}));
    const auto m = pmod::moduli_dims(pmod::make_parabolic_data(g, k, 0, cusps), true);
    EXPECT_EQ(m.d - *m.d0, g);
  }
}

}  // namespace
