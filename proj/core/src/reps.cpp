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

#include "pmod/reps.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace pmod {

namespace {

CMatrix kron(const CMatrix& x, const CMatrix& y) {
  CMatrix out(x.rows() * y.rows(), x.cols() * y.cols());
  for (Eigen::Index p = 0; p < x.rows(); ++p) {
    for (Eigen::Index q = 0; q < x.cols(); ++q) {
      out.block(p * y.rows(), q * y.cols(), y.rows(), y.cols()) = x(p, q) * y;
    }
  }
  return out;
}

}  // namespace

CVector vectorize(const CMatrix& x) {
  const auto rows = x.rows();
  const auto cols = x.cols();
  CVector v(rows * cols);
  for (Eigen::Index p = 0; p < rows; ++p) {
    for (Eigen::Index q = 0; q < cols; ++q) v(p * cols + q) = x(p, q);
  }
  return v;
}

CMatrix unvectorize(const CVector& v, int k) {
  if (v.size() != static_cast<Eigen::Index>(k) * k) throw std::invalid_argument("unvectorize: size mismatch");
  CMatrix x(k, k);
  for (int p = 0; p < k; ++p) {
    for (int q = 0; q < k; ++q) x(p, q) = v(p * k + q);
  }
  return x;
}

UnitaryRep::UnitaryRep(int rank, std::vector<CMatrix> images) : rank_(rank), images_(std::move(images)) {
  if (rank < 1) throw std::invalid_argument("UnitaryRep: rank must be >= 1");
  for (std::size_t j = 0; j < images_.size(); ++j) {
    const CMatrix& u = images_[j];
    if (u.rows() != rank || u.cols() != rank) {
      throw std::invalid_argument("UnitaryRep: image " + std::to_string(j) + " has wrong shape");
    }
    const double defect = (u.adjoint() * u - CMatrix::Identity(rank, rank)).cwiseAbs().maxCoeff();
    if (defect > 1e-10) {
      std::ostringstream msg;
      msg << "UnitaryRep: image " << j << " is not unitary (|U*U - I| = " << defect << ")";
      throw std::invalid_argument(msg.str());
    }
  }
}

const CMatrix& UnitaryRep::image(int generator) const {
  if (generator < 0 || generator >= generator_count()) {
    throw std::out_of_range("UnitaryRep: generator index " + std::to_string(generator) + " out of range");
  }
  return images_[generator];
}

CMatrix UnitaryRep::evaluate(const GroupWord& w) const {
  CMatrix out = CMatrix::Identity(rank_, rank_);
  for (const Letter& x : w.letters()) {
    const CMatrix& u = image(x.generator);
    if (x.exponent > 0) {
      out = out * u;
    } else {
      out = out * u.adjoint();
    }
  }
  return out;
}

UnitaryRep trivial_rep(int generator_count, int rank) {
  return UnitaryRep(rank, std::vector<CMatrix>(generator_count, CMatrix::Identity(rank, rank)));
}

AdjointRep::AdjointRep(UnitaryRep base) : base_(std::move(base)) {}

CMatrix AdjointRep::of(const CMatrix& u) {
  return kron(u, u.conjugate());
}

UnitaryRep AdjointRep::as_unitary() const {
  std::vector<CMatrix> images;
  for (const auto& u : base_.images()) images.push_back(of(u));
  return UnitaryRep(rank(), std::move(images));
}

AdjointRep adjoint(const UnitaryRep& rep) { return AdjointRep(rep); }

namespace {

void check_generators(const UnitaryRep& rep, const FreeFuchsianGroup& g) {
  if (rep.generator_count() != g.rank()) {
    throw std::invalid_argument("representation has " + std::to_string(rep.generator_count()) +
                                " generator images, group has " + std::to_string(g.rank()));
  }
}

double circle_arg(std::complex<double> z) {
  double t = std::arg(z);
  if (t < 0.0) t += 2.0 * std::numbers::pi;
  return t;
}

}  // namespace

AdmissibilityReport check_admissible(const UnitaryRep& rep, const FreeFuchsianGroup& g,
                                     const ParabolicData& d, double tol) {
  validate(d);
  check_generators(rep, g);
  if (rep.rank() != d.rank) {
    throw std::invalid_argument("check_admissible: representation rank " + std::to_string(rep.rank()) +
                                " differs from bundle rank " + std::to_string(d.rank));
  }
  if (static_cast<int>(d.cusps.size()) != g.n_cusps()) {
    throw std::invalid_argument("check_admissible: cusp count differs between group and weights");
  }
  AdmissibilityReport report;
  report.admissible = true;
  for (int i = 1; i <= g.n_cusps(); ++i) {
    const CMatrix s = rep.evaluate(g.cusp_words[i - 1]);
    Eigen::ComplexEigenSolver<CMatrix> solver(s, false);
    std::vector<std::complex<double>> eig(solver.eigenvalues().begin(), solver.eigenvalues().end());
    std::sort(eig.begin(), eig.end(), [](auto x, auto y) { return circle_arg(x) < circle_arg(y); });

    std::vector<std::complex<double>> targets;
    for (const auto& b : d.cusps[i - 1].blocks) {
      const auto t = std::polar(1.0, 2.0 * std::numbers::pi * b.alpha.value());
      targets.insert(targets.end(), b.mult, t);
    }
    std::vector<bool> used(targets.size(), false);

    CuspAdmissibility cusp;
    cusp.cusp = i;
    cusp.eigenvalues = eig;
    for (const auto& lambda : eig) {
      std::size_t best = targets.size();
      for (std::size_t t = 0; t < targets.size(); ++t) {
        if (used[t]) continue;
        if (best == targets.size() || std::abs(lambda - targets[t]) < std::abs(lambda - targets[best])) {
          best = t;
        }
      }
      used[best] = true;
      cusp.matched.push_back(targets[best]);
      cusp.residuals.push_back(std::abs(lambda - targets[best]));
    }
    cusp.max_residual = *std::max_element(cusp.residuals.begin(), cusp.residuals.end());
    cusp.pass = cusp.max_residual <= tol;
    report.admissible = report.admissible && cusp.pass;
    report.cusps.push_back(std::move(cusp));
  }
  return report;
}

CMatrix null_space(const CMatrix& m, double svd_tol) {
  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  Eigen::Index rank = 0;
  for (Eigen::Index j = 0; j < sv.size(); ++j) {
    if (sv(j) > svd_tol) ++rank;
  }
  const Eigen::Index n = m.cols();
  return svd.matrixV().rightCols(n - rank);
}

Irreducibility irreducibility(const UnitaryRep& rep, const FreeFuchsianGroup& g, double svd_tol) {
  check_generators(rep, g);
  const int k = rep.rank();
  const CMatrix id = CMatrix::Identity(k, k);
  CMatrix stacked(static_cast<Eigen::Index>(k) * k * std::max(1, rep.generator_count()), k * k);
  stacked.setZero();
  for (int j = 0; j < rep.generator_count(); ++j) {
    const CMatrix& u = rep.image(j);
    // vec(X u) - vec(u X) = (I kron u^T - u kron I) vec(X)
    const CMatrix block = kron(id, u.transpose()) - kron(u, id);
    stacked.middleRows(static_cast<Eigen::Index>(j) * k * k, k * k) = block;
  }
  const int dim = static_cast<int>(null_space(stacked, svd_tol).cols());
  return {dim == 1, dim};
}

UnitaryRep fricke_su2(double alpha) {
  if (!(alpha > 0.0 && alpha < 0.5)) throw std::invalid_argument("fricke_su2: alpha must lie in (0, 1/2)");
  using namespace std::complex_literals;
  const double c = std::cos(std::numbers::pi * alpha);
  const double s = std::sin(std::numbers::pi * alpha);
  CMatrix a(2, 2);
  a << 1i, 0.0, 0.0, -1i;
  CMatrix b(2, 2);
  b << -1i * c, s, -s, 1i * c;
  return UnitaryRep(2, {a, b});
}

CuspInvariantSpace invariant_cusp_space(const AdjointRep& ad, const FreeFuchsianGroup& g,
                                        int cusp_index, double svd_tol) {
  g.check_cusp_index(cusp_index);
  check_generators(ad.base(), g);
  const int k = ad.base_rank();
  const CMatrix m = ad.evaluate(g.cusp_words[cusp_index - 1]) - CMatrix::Identity(k * k, k * k);
  const CMatrix kernel = null_space(m, svd_tol);

  CuspInvariantSpace out;
  for (Eigen::Index j = 0; j < kernel.cols(); ++j) out.basis.push_back(unvectorize(kernel.col(j), k));

  // tr v = <vec I, vec v> is a linear functional on the kernel coordinates.
  const CVector vec_id = vectorize(CMatrix::Identity(k, k));
  const CMatrix functional = vec_id.transpose() * kernel;
  const CMatrix coords = null_space(functional, svd_tol);
  const CMatrix traceless = kernel * coords;
  for (Eigen::Index j = 0; j < traceless.cols(); ++j) {
    out.traceless_basis.push_back(unvectorize(traceless.col(j), k));
  }
  return out;
}

CuspFrame cusp_frame(const UnitaryRep& rep, const FreeFuchsianGroup& g, int cusp_index,
                     const CuspWeights& weights, double svd_tol) {
  g.check_cusp_index(cusp_index);
  check_generators(rep, g);
  const int k = rep.rank();
  if (weights.rank() != k) throw std::invalid_argument("cusp_frame: weight multiplicities do not sum to rank");
  const CMatrix s = rep.evaluate(g.cusp_words[cusp_index - 1]);

  CuspFrame frame;
  frame.unitary = CMatrix::Zero(k, k);
  int col = 0;
  for (int l = 0; l < weights.levels(); ++l) {
    const auto& block = weights.blocks[l];
    const auto lambda = std::polar(1.0, 2.0 * std::numbers::pi * block.alpha.value());
    const CMatrix space = null_space(s - lambda * CMatrix::Identity(k, k), svd_tol);
    if (space.cols() != block.mult) {
      std::ostringstream msg;
      msg << "cusp_frame: eigenspace for weight " << block.alpha.to_string() << " has dimension "
          << space.cols() << ", expected " << block.mult;
      throw std::invalid_argument(msg.str());
    }
    frame.eigenvectors.emplace_back();
    for (Eigen::Index j = 0; j < space.cols(); ++j) {
      frame.eigenvectors.back().push_back(space.col(j));
      frame.unitary.col(col++) = space.col(j);
      frame.level_of_column.push_back(l);
    }
  }
  return frame;
}

std::vector<std::vector<CMatrix>> level_vectors(const CuspFrame& frame) {
  const auto k = frame.unitary.rows();
  const CMatrix scalar = CMatrix::Identity(k, k) / static_cast<double>(k);
  std::vector<std::vector<CMatrix>> out;
  for (const auto& level : frame.eigenvectors) {
    out.emplace_back();
    for (const auto& u : level) out.back().push_back(u * u.adjoint() - scalar);
  }
  return out;
}

}  // namespace pmod
