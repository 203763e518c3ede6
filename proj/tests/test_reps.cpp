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

#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "pmod/group.hpp"
#include "pmod/reps.hpp"

namespace {

using pmod::CMatrix;
using pmod::GroupWord;
using pmod::Rational;
using pmod::Weight;
using cd = std::complex<double>;

constexpr double kPi = std::numbers::pi;

CMatrix random_unitary(std::mt19937_64& rng, int k) {
  std::normal_distribution<double> n;
  CMatrix m(k, k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) m(i, j) = cd(n(rng), n(rng));
  }
  return Eigen::HouseholderQR<CMatrix>(m).householderQ();
}

pmod::CuspWeights torus_weights(double a) {
  return pmod::make_cusp_weights({{Weight::approximate(a), 1}, {Weight::approximate(1.0 - a), 1}});
}

pmod::ParabolicData torus_data(pmod::CuspWeights w) { return pmod::make_parabolic_data(1, 2, -1, {std::move(w)}); }

TEST(Vectorize, RowMajorKroneckerConvention) {
  std::mt19937_64 rng(1);
  const CMatrix a = random_unitary(rng, 3);
  const CMatrix x = random_unitary(rng, 3);
  // vec(a x a^*) = (a kron conj a) vec(x).
  EXPECT_LE((pmod::vectorize(pmod::AdjointRep::act(a, x)) - pmod::AdjointRep::of(a) * pmod::vectorize(x)).norm(),
            1e-12);
  EXPECT_LE((pmod::unvectorize(pmod::vectorize(x), 3) - x).norm(), 0.0);
  EXPECT_EQ(pmod::vectorize(x)(1), x(0, 1));
}

TEST(UnitaryRep, ValidatesImages) {
  CMatrix bad = CMatrix::Identity(2, 2);
  bad(0, 0) = 2.0;
  EXPECT_THROW(pmod::UnitaryRep(2, {bad, CMatrix::Identity(2, 2)}), std::invalid_argument);
  EXPECT_THROW(pmod::UnitaryRep(2, {CMatrix::Identity(3, 3)}), std::invalid_argument);
  const pmod::UnitaryRep r(2, {CMatrix::Identity(2, 2)});
  EXPECT_THROW(r.image(1), std::out_of_range);
  EXPECT_THROW(r.evaluate(GroupWord::generator(1)), std::out_of_range);
}

TEST(UnitaryRep, Evaluate) {
  std::mt19937_64 rng(2);
  const pmod::UnitaryRep r(3, {random_unitary(rng, 3), random_unitary(rng, 3)});
  EXPECT_LE((r.evaluate(GroupWord()) - CMatrix::Identity(3, 3)).norm(), 0.0);
  EXPECT_LE((r.evaluate(GroupWord::generator(1)) - r.image(1)).norm(), 0.0);
  const GroupWord w({{0, 1}, {1, -1}, {0, 1}, {1, 1}});
  EXPECT_LE((r.evaluate(w) * r.evaluate(w.inverse()) - CMatrix::Identity(3, 3)).cwiseAbs().maxCoeff(), 1e-10);
  const CMatrix direct = r.image(0) * r.image(1).adjoint() * r.image(0) * r.image(1);
  EXPECT_LE((r.evaluate(w) - direct).norm(), 1e-13);
}

TEST(Adjoint, EigenvaluesOfDiagonalImage) {
  const double theta = 0.7;
  CMatrix u = CMatrix::Zero(2, 2);
  u(0, 0) = std::polar(1.0, theta);
  u(1, 1) = std::polar(1.0, -theta);
  const CMatrix ad = pmod::AdjointRep::of(u);
  EXPECT_EQ(ad(0, 0), cd(1.0, 0.0));
  EXPECT_NEAR(std::abs(ad(1, 1) - std::polar(1.0, 2 * theta)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(ad(2, 2) - std::polar(1.0, -2 * theta)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(ad(3, 3) - 1.0), 0.0, 1e-15);
  EXPECT_LE((ad - CMatrix(ad.diagonal().asDiagonal())).norm(), 0.0);
}

TEST(Adjoint, CharacterAndHomomorphism) {
  std::mt19937_64 rng(3);
  const pmod::UnitaryRep r(2, {random_unitary(rng, 2), random_unitary(rng, 2)});
  const pmod::AdjointRep ad(r);
  EXPECT_EQ(ad.rank(), 4);
  EXPECT_LE((pmod::AdjointRep::of(CMatrix::Identity(2, 2)) - CMatrix::Identity(4, 4)).norm(), 0.0);
  const GroupWord w1({{0, 1}, {1, 1}});
  const GroupWord w2({{1, -1}, {0, -1}, {1, -1}});
  EXPECT_LE((ad.evaluate(w1 * w2) - ad.evaluate(w1) * ad.evaluate(w2)).cwiseAbs().maxCoeff(), 1e-9);
  EXPECT_NEAR(std::abs(ad.evaluate(w1).trace() - std::norm(r.evaluate(w1).trace())), 0.0, 1e-12);
  // The identity endomorphism is fixed.
  const CMatrix id = CMatrix::Identity(2, 2);
  EXPECT_LE((ad.evaluate(w2) * pmod::vectorize(id) - pmod::vectorize(id)).norm(), 1e-12);
  const CMatrix a = ad.evaluate(w1);
  EXPECT_LE((a.adjoint() * a - CMatrix::Identity(4, 4)).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(Fricke, Construction) {
  for (double a : {0.1, 0.25, 0.3, 0.45}) {
    const auto rho = pmod::fricke_su2(a);
    for (const CMatrix& u : rho.images()) {
      EXPECT_NEAR(std::abs(u.determinant() - 1.0), 0.0, 1e-12);
      EXPECT_LE((u.adjoint() * u - CMatrix::Identity(2, 2)).cwiseAbs().maxCoeff(), 1e-12);
    }
    const CMatrix& x = rho.image(0);
    const CMatrix& y = rho.image(1);
    EXPECT_NEAR(std::abs(x.trace()), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(y.trace()), 0.0, 1e-15);
    EXPECT_NEAR(std::abs((x * y).trace() - 2.0 * std::cos(kPi * a)), 0.0, 1e-12);
    const CMatrix comm = x * y * x.adjoint() * y.adjoint();
    EXPECT_NEAR(std::abs(comm.trace() - 2.0 * std::cos(2.0 * kPi * a)), 0.0, 1e-12);
  }
  const auto quarter = pmod::fricke_su2(0.25);
  const CMatrix c = quarter.image(0) * quarter.image(1) * quarter.image(0).adjoint() * quarter.image(1).adjoint();
  EXPECT_NEAR(std::abs(c.trace()), 0.0, 1e-12);
  EXPECT_THROW(pmod::fricke_su2(0.0), std::invalid_argument);
  EXPECT_THROW(pmod::fricke_su2(0.5), std::invalid_argument);
}

TEST(Admissible, FrickeAgainstWeights) {
  const auto g = pmod::punctured_torus_group();
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.01, 0.49);
  for (int i = 0; i < 20; ++i) {
    const double a = u(rng);
    const auto report = pmod::check_admissible(pmod::fricke_su2(a), g, torus_data(torus_weights(a)));
    EXPECT_TRUE(report.admissible) << a;
    ASSERT_EQ(report.cusps.size(), 1u);
    EXPECT_LE(report.cusps[0].max_residual, 1e-8);
  }
  const auto wrong = pmod::make_parabolic_data(1, 2, -1, {pmod::make_cusp_weights({{Weight::approximate(0.3), 2}})});
  const auto report = pmod::check_admissible(pmod::fricke_su2(0.3), g, wrong);
  EXPECT_FALSE(report.admissible);
  EXPECT_FALSE(report.cusps[0].pass);
}

TEST(Admissible, TrivialRankOne) {
  const auto g = pmod::punctured_torus_group();
  const auto d = pmod::make_parabolic_data(1, 1, 0, {pmod::make_cusp_weights({{Weight::exact(Rational(0)), 1}})});
  EXPECT_TRUE(pmod::check_admissible(pmod::trivial_rep(2), g, d).admissible);
  EXPECT_THROW(pmod::check_admissible(pmod::fricke_su2(0.3), g, d), std::invalid_argument);
}

TEST(Irreducibility, Examples) {
  const auto g = pmod::punctured_torus_group();
  const auto one = pmod::irreducibility(pmod::trivial_rep(2), g);
  EXPECT_TRUE(one.irreducible);
  EXPECT_EQ(one.commutant_dim, 1);

  CMatrix x = CMatrix::Zero(2, 2);
  x(0, 0) = std::polar(1.0, 0.4);
  x(1, 1) = std::polar(1.0, 1.1);
  CMatrix y = CMatrix::Zero(2, 2);
  y(0, 0) = std::polar(1.0, -0.3);
  y(1, 1) = std::polar(1.0, 2.0);
  const auto sum = pmod::irreducibility(pmod::UnitaryRep(2, {x, y}), g);
  EXPECT_FALSE(sum.irreducible);
  EXPECT_EQ(sum.commutant_dim, 2);

  for (double a : {0.1, 0.3, 0.45}) EXPECT_TRUE(pmod::irreducibility(pmod::fricke_su2(a), g).irreducible);
}

TEST(Irreducibility, ConjugationInvariant) {
  const auto g = pmod::punctured_torus_group();
  std::mt19937_64 rng(5);
  const auto rho = pmod::fricke_su2(0.3);
  const CMatrix w = random_unitary(rng, 2);
  const pmod::UnitaryRep conj(2, {w * rho.image(0) * w.adjoint(), w * rho.image(1) * w.adjoint()});
  EXPECT_EQ(pmod::irreducibility(conj, g).commutant_dim, pmod::irreducibility(rho, g).commutant_dim);

  CMatrix x = CMatrix::Identity(3, 3);
  x(2, 2) = -1.0;
  const pmod::UnitaryRep red(3, {x, CMatrix::Identity(3, 3)});
  const CMatrix v = random_unitary(rng, 3);
  const pmod::UnitaryRep red_conj(3, {v * x * v.adjoint(), CMatrix::Identity(3, 3)});
  EXPECT_EQ(pmod::irreducibility(red, g).commutant_dim, 5);
  EXPECT_EQ(pmod::irreducibility(red_conj, g).commutant_dim, 5);
}

TEST(InvariantCuspSpace, FrickeDimensions) {
  const auto g = pmod::punctured_torus_group();
  const pmod::AdjointRep ad(pmod::fricke_su2(0.3));
  const auto v = pmod::invariant_cusp_space(ad, g, 1);
  EXPECT_EQ(v.basis.size(), 2u);
  ASSERT_EQ(v.traceless_basis.size(), 1u);
  const CMatrix s = ad.base().evaluate(g.cusp_words[0]);
  for (const CMatrix& b : v.basis) EXPECT_LE((pmod::AdjointRep::act(s, b) - b).norm(), 1e-10);
  EXPECT_NEAR(std::abs(v.traceless_basis[0].trace()), 0.0, 1e-12);
  EXPECT_NEAR(v.traceless_basis[0].norm(), 1.0, 1e-12);
}

TEST(InvariantCuspSpace, TrivialImageGivesEverything) {
  const auto g = pmod::punctured_torus_group();
  const pmod::AdjointRep ad(pmod::trivial_rep(2, 3));
  const auto v = pmod::invariant_cusp_space(ad, g, 1);
  EXPECT_EQ(v.basis.size(), 9u);
  EXPECT_EQ(v.traceless_basis.size(), 8u);
}

TEST(CuspFrame, LevelVectors) {
  const auto g = pmod::punctured_torus_group();
  const auto rho = pmod::fricke_su2(0.3);
  const auto w = torus_weights(0.3);
  const auto frame = pmod::cusp_frame(rho, g, 1, w);
  EXPECT_LE((frame.unitary.adjoint() * frame.unitary - CMatrix::Identity(2, 2)).cwiseAbs().maxCoeff(), 1e-12);
  const CMatrix s = rho.evaluate(g.cusp_words[0]);
  for (int c = 0; c < 2; ++c) {
    const double alpha = w.blocks[static_cast<std::size_t>(frame.level_of_column[static_cast<std::size_t>(c)])].alpha.value();
    EXPECT_LE((s * frame.unitary.col(c) - std::polar(1.0, 2 * kPi * alpha) * frame.unitary.col(c)).norm(), 1e-10);
  }
  const auto vs = pmod::level_vectors(frame);
  CMatrix total = CMatrix::Zero(2, 2);
  for (const auto& level : vs) {
    for (const CMatrix& v : level) {
      EXPECT_NEAR(std::abs(v.trace()), 0.0, 1e-12);
      total += v;
    }
  }
  EXPECT_LE(total.norm(), 1e-12);
  EXPECT_THROW(pmod::cusp_frame(rho, g, 1, pmod::make_cusp_weights({{Weight::approximate(0.3), 2}})),
               std::invalid_argument);
}

}  // namespace
