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
#include <functional>
#include <vector>

#include "pmod/group.hpp"
#include "pmod/parabolic.hpp"
#include "pmod/reps.hpp"
#include "pmod/truncated.hpp"

namespace pmod {

/**
 * Free Green's kernel of Delta = -(y^2/2)(d_xx + d_yy) on the upper half plane,
 * Q(z, w) = -(1/pi) log |(z - w) / (conj(z) - w)|. The identity factor on
 * End C^k is implicit. Throws std::invalid_argument for coincident points or
 * points off the upper half plane.
 */
double kernel_Q(std::complex<double> z, std::complex<double> w);

struct ZetaQuery {
  std::complex<double> s;
  UnitaryRep character;
  int max_word_len = 0;
  double k_tail_eps = 1e-15;  // the k-product stops once N^(-Re s - k) < k_tail_eps
};

/**
 * log Z(s) = sum over primitive hyperbolic classes {gamma} of length <=
 * max_word_len of sum_{k>=0} sum_j log(1 - lambda_j N^{-s-k}), lambda_j the
 * eigenvalues of the character at gamma. Valid for Re s > 1 only.
 *
 * Throws std::invalid_argument for Re s <= 1 or a character whose generator
 * count differs from the group rank.
 */
TruncatedValue<std::complex<double>> selberg_log_zeta(const FreeFuchsianGroup& g, const ZetaQuery& q);

/// Term-wise s-derivative of selberg_log_zeta.
TruncatedValue<std::complex<double>> zeta_log_derivative(const FreeFuchsianGroup& g, const ZetaQuery& q);

/**
 * HEURISTIC stand-in for det Delta = lim_{s->1} Z(s)/(s - 1): the truncated
 * product evaluated at s = 1 + eps for eps in {0.1, 0.05, 0.025}, followed by
 * two Richardson steps. The true value needs analytic continuation, which
 * this library does not provide; treat the output as a diagnostic only.
 */
struct DetHeuristic {
  std::vector<double> epsilons;
  std::vector<double> ratios;  // Z(1 + eps) / eps
  double extrapolated = 0.0;
};

DetHeuristic det_laplacian_heuristic(const FreeFuchsianGroup& g, const ZetaQuery& q);

/**
 * Partial sums of the Eisenstein-Maass series
 *   E_i(z, v; s) = sum over Gamma_i \ Gamma of Im(sigma_i^-1 gamma z)^s Ad rho(gamma)^-1 v
 * over the coset representatives of word length <= coset_max_len. The coset
 * list is computed once, so evaluating at many points is cheap.
 */
class EisensteinSeries {
 public:
  /// Throws std::invalid_argument if Re s <= 1 or v is not in V_i within membership_tol.
  EisensteinSeries(const FreeFuchsianGroup& g, const AdjointRep& ad, int cusp_index, const CMatrix& v,
                   std::complex<double> s, int coset_max_len, double membership_tol = kSvdTol);

  /// Partial sum at z with a shell-extrapolated tail estimate.
  TruncatedValue<CMatrix> operator()(std::complex<double> z) const;
  /// Partial sum only.
  CMatrix value(std::complex<double> z) const;

  std::size_t coset_count() const { return terms_.size(); }
  std::complex<double> s() const { return s_; }
  int coset_max_len() const { return max_len_; }

 private:
  struct Term {
    MoebiusMap scaled;    // sigma_i^-1 gamma
    CMatrix coefficient;  // Ad rho(gamma)^-1 v
    int length = 0;
  };
  std::vector<Term> terms_;
  std::complex<double> s_;
  int max_len_ = 0;
  int shell_period_ = 1;
  double v_norm_ = 0.0;
};

TruncatedValue<CMatrix> eisenstein_partial(const FreeFuchsianGroup& g, const AdjointRep& ad, int cusp_index,
                                           const CMatrix& v, std::complex<double> z, std::complex<double> s,
                                           int coset_max_len);

/**
 * Relative residual ||Delta_h E - s(1-s)/2 E|| / ||E|| at z, with Delta_h the
 * five-point stencil of -(y^2/2)(d_xx + d_yy) and step h in x and y. Throws
 * std::invalid_argument when Im z <= 2h.
 */
double laplace_eigen_residual(const std::function<CMatrix(std::complex<double>)>& e, std::complex<double> z,
                              std::complex<double> s, double h = 1e-3);

/**
 * Diagonal k^2 x k^2 matrix with entry -sgn(a_l - a_m) i (1/2 - |a_l - a_m|)
 * at index (p, q) of the row-major vectorization, where p lies in level l and
 * q in level m; sgn(0) = 1.
 */
CMatrix cusp_constant_T(const CuspWeights& c);

/// (U kron conj U) T (U kron conj U)^-1 for the eigenframe U of rho(S_i).
CMatrix conjugated_cusp_constant(const CuspFrame& frame, const CuspWeights& c);

/**
 * (1/2pi) sum_{0 < |m| <= M} (1/(m + 2iy) - 1/m) Ad rho(S_i^m), the series
 * whose y -> infinity limit is the cusp constant C_i. Powers are built by
 * repeated multiplication. Throws std::invalid_argument unless y >= 10 and
 * M >= 10^4.
 */
CMatrix cusp_constant_series(const AdjointRep& ad, const FreeFuchsianGroup& g, int cusp_index, double y,
                             std::int64_t terms);

}  // namespace pmod
