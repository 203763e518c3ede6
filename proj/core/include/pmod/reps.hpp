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

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "pmod/group.hpp"
#include "pmod/parabolic.hpp"
#include "pmod/words.hpp"

namespace pmod {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Default threshold below which singular values count as zero.
inline constexpr double kSvdTol = 1e-8;

/**
 * Endomorphisms of C^k are vectorized row-major: vec(X)[p k + q] = X(p, q).
 * With this convention vec(A X B) = (A kron B^T) vec(X).
 */
CVector vectorize(const CMatrix& x);
CMatrix unvectorize(const CVector& v, int k);

/// A representation Gamma -> U(k), given by the images of the free generators.
class UnitaryRep {
 public:
  /// Throws std::invalid_argument unless every image is k x k and unitary to 1e-10.
  UnitaryRep(int rank, std::vector<CMatrix> images);

  int rank() const { return rank_; }
  int generator_count() const { return static_cast<int>(images_.size()); }
  const CMatrix& image(int generator) const;
  const std::vector<CMatrix>& images() const { return images_; }

  /// Product of generator images along w. Throws std::out_of_range on a bad index.
  CMatrix evaluate(const GroupWord& w) const;

 private:
  int rank_;
  std::vector<CMatrix> images_;
};

/// The trivial representation of the given rank.
UnitaryRep trivial_rep(int generator_count, int rank = 1);

/// Ad rho(gamma) = rho(gamma) kron conj(rho(gamma)), acting on vectorized End C^k.
class AdjointRep {
 public:
  explicit AdjointRep(UnitaryRep base);

  int rank() const { return base_.rank() * base_.rank(); }
  int base_rank() const { return base_.rank(); }
  const UnitaryRep& base() const { return base_; }

  CMatrix evaluate(const GroupWord& w) const { return of(base_.evaluate(w)); }
  /// Ad of a single unitary matrix.
  static CMatrix of(const CMatrix& u);
  /// Ad rho(gamma) applied to an endomorphism X: u X u^-1.
  static CMatrix act(const CMatrix& u, const CMatrix& x) { return u * x * u.adjoint(); }

  /// The k^2-dimensional representation as a plain UnitaryRep.
  UnitaryRep as_unitary() const;

 private:
  UnitaryRep base_;
};

AdjointRep adjoint(const UnitaryRep& rep);

struct CuspAdmissibility {
  int cusp = 0;
  bool pass = false;
  std::vector<std::complex<double>> eigenvalues;  // sorted by argument
  std::vector<std::complex<double>> matched;      // target matched to each eigenvalue
  std::vector<double> residuals;
  double max_residual = 0.0;
};

struct AdmissibilityReport {
  bool admissible = false;
  std::vector<CuspAdmissibility> cusps;
};

/**
 * Matches the eigenvalues of rho(S_i) against e^{2 pi i alpha_l} with
 * multiplicity k_l, greedily: eigenvalues are visited by increasing argument
 * and each takes the nearest unmatched target.
 */
AdmissibilityReport check_admissible(const UnitaryRep& rep, const FreeFuchsianGroup& g,
                                     const ParabolicData& d, double tol = 1e-8);

struct Irreducibility {
  bool irreducible = false;
  int commutant_dim = 0;
};

/// Dimension of the commutant of the generator images, via the nullity of the stacked system.
Irreducibility irreducibility(const UnitaryRep& rep, const FreeFuchsianGroup& g,
                              double svd_tol = kSvdTol);

/**
 * SU(2) representation of the punctured torus group with rho(A) = diag(i, -i),
 * rho(B) = [[-i cos(pi a), sin(pi a)], [-sin(pi a), i cos(pi a)]]. The
 * commutator has trace 2 cos(2 pi a), so rho(S) has eigenvalues e^{+-2 pi i a}.
 * Throws std::invalid_argument unless 0 < alpha < 1/2.
 */
UnitaryRep fricke_su2(double alpha);

struct CuspInvariantSpace {
  std::vector<CMatrix> basis;            // orthonormal basis of V_i = ker(Ad rho(S_i) - I)
  std::vector<CMatrix> traceless_basis;  // orthonormal basis of {v in V_i : tr v = 0}
};

CuspInvariantSpace invariant_cusp_space(const AdjointRep& ad, const FreeFuchsianGroup& g,
                                        int cusp_index, double svd_tol = kSvdTol);

/**
 * Orthonormal eigenvectors of rho(S_i), grouped by weight level: column block
 * l of unitary spans the e^{2 pi i alpha_l} eigenspace.
 */
struct CuspFrame {
  CMatrix unitary;
  std::vector<int> level_of_column;
  std::vector<std::vector<CVector>> eigenvectors;
};

/// Throws std::invalid_argument if an eigenspace dimension differs from its multiplicity.
CuspFrame cusp_frame(const UnitaryRep& rep, const FreeFuchsianGroup& g, int cusp_index,
                     const CuspWeights& weights, double svd_tol = kSvdTol);

/// v_j = u_j kron conj(u_j) - I/k for each eigenvector, grouped by level.
std::vector<std::vector<CMatrix>> level_vectors(const CuspFrame& frame);

/// Orthonormal basis (columns) of the null space of m.
CMatrix null_space(const CMatrix& m, double svd_tol = kSvdTol);

}  // namespace pmod
