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
#include <stdexcept>

#include "pmod/spectral.hpp"

namespace pmod {

EisensteinSeries::EisensteinSeries(const FreeFuchsianGroup& g, const AdjointRep& ad, int cusp_index,
                                   const CMatrix& v, std::complex<double> s, int coset_max_len,
                                   double membership_tol)
    : s_(s), max_len_(coset_max_len) {
  g.check_cusp_index(cusp_index);
  if (!(s.real() > 1.0)) throw std::invalid_argument("Eisenstein series: Re s must exceed 1");
  if (coset_max_len < 0) throw std::invalid_argument("Eisenstein series: coset_max_len must be >= 0");
  if (ad.base().generator_count() != g.rank()) {
    throw std::invalid_argument("Eisenstein series: representation and group rank differ");
  }
  const int k = ad.base_rank();
  if (v.rows() != k || v.cols() != k) {
    throw std::invalid_argument("Eisenstein series: v must be a " + std::to_string(k) + "x" + std::to_string(k) +
                                " matrix");
  }
  const CMatrix cusp = ad.base().evaluate(g.cusp_words[cusp_index - 1]);
  const double defect = (AdjointRep::act(cusp, v) - v).norm();
  if (defect > membership_tol * std::max(1.0, v.norm())) {
    throw std::invalid_argument("Eisenstein series: v is not invariant under Ad rho(S_i)");
  }
  v_norm_ = v.norm();
  shell_period_ = g.shell_period();

  for (CosetRep& rep : coset_reps(g, cusp_index, coset_max_len)) {
    const CMatrix u = ad.base().evaluate(rep.word);
    // Ad rho(gamma)^-1 v = u^* v u.
    terms_.push_back({rep.scaled, u.adjoint() * v * u, static_cast<int>(rep.word.length())});
  }
}

CMatrix EisensteinSeries::value(std::complex<double> z) const { return (*this)(z).value; }

TruncatedValue<CMatrix> EisensteinSeries::operator()(std::complex<double> z) const {
  if (!(z.imag() > 0.0)) throw std::invalid_argument("Eisenstein series: Im z must be positive");
  TruncatedValue<CMatrix> out;
  const auto k = terms_.empty() ? 0 : terms_.front().coefficient.rows();
  out.value = CMatrix::Zero(k, k);
  std::vector<double> shells(static_cast<std::size_t>(max_len_) + 1, 0.0);
  for (const Term& t : terms_) {
    const double y = t.scaled.apply(z).imag();
    const std::complex<double> weight = std::exp(s_ * std::log(y));
    out.value += weight * t.coefficient;
    shells[static_cast<std::size_t>(t.length)] += std::abs(weight) * v_norm_;
  }
  out.cutoff = {"coset_max_len", max_len_, static_cast<std::int64_t>(terms_.size())};
  out.tail_estimate = shell_tail_estimate(shells, shell_period_);
  return out;
}

TruncatedValue<CMatrix> eisenstein_partial(const FreeFuchsianGroup& g, const AdjointRep& ad, int cusp_index,
                                           const CMatrix& v, std::complex<double> z, std::complex<double> s,
                                           int coset_max_len) {
  return EisensteinSeries(g, ad, cusp_index, v, s, coset_max_len)(z);
}

double laplace_eigen_residual(const std::function<CMatrix(std::complex<double>)>& e, std::complex<double> z,
                              std::complex<double> s, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("laplace_eigen_residual: h must be positive");
  if (!(z.imag() > 2.0 * h)) throw std::invalid_argument("laplace_eigen_residual: Im z must exceed 2h");
  const CMatrix center = e(z);
  const CMatrix sum = e(z + h) + e(z - h) + e(z + std::complex<double>(0.0, h)) + e(z - std::complex<double>(0.0, h));
  const double y = z.imag();
  const CMatrix lap = (-0.5 * y * y / (h * h)) * (sum - 4.0 * center);
  const double denom = center.norm();
  if (denom == 0.0) throw std::invalid_argument("laplace_eigen_residual: function vanishes at z");
  return (lap - (s * (1.0 - s) / 2.0) * center).norm() / denom;
}

}  // namespace pmod
