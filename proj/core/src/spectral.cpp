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

#include "pmod/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace pmod {

double kernel_Q(std::complex<double> z, std::complex<double> w) {
  if (!(z.imag() > 0.0) || !(w.imag() > 0.0)) throw std::invalid_argument("kernel_Q: points must lie in H");
  if (z == w) throw std::invalid_argument("kernel_Q: coincident points");
  return -std::log(std::abs((z - w) / (std::conj(z) - w))) / std::numbers::pi;
}

namespace {

struct ClassSpectrum {
  std::size_t length;
  double norm;
  std::vector<std::complex<double>> eigenvalues;
};

void check_query(const FreeFuchsianGroup& g, const ZetaQuery& q) {
  if (!(q.s.real() > 1.0)) throw std::invalid_argument("Selberg zeta: Re s must exceed 1");
  if (q.character.generator_count() != g.rank()) {
    throw std::invalid_argument("Selberg zeta: character has " + std::to_string(q.character.generator_count()) +
                                " generator images, group has rank " + std::to_string(g.rank()));
  }
  if (q.max_word_len < 0) throw std::invalid_argument("Selberg zeta: max_word_len must be >= 0");
  if (!(q.k_tail_eps > 0.0 && q.k_tail_eps < 1.0)) {
    throw std::invalid_argument("Selberg zeta: k_tail_eps must lie in (0, 1)");
  }
}

std::vector<ClassSpectrum> class_spectra(const FreeFuchsianGroup& g, const ZetaQuery& q) {
  std::vector<ClassSpectrum> out;
  for (const ConjClass& c : primitive_classes(g, q.max_word_len)) {
    if (!c.primitive) continue;
    const CMatrix chi = q.character.evaluate(c.cyclic_word);
    std::vector<std::complex<double>> eig;
    if (chi.rows() == 1) {
      eig.push_back(chi(0, 0));
    } else {
      Eigen::ComplexEigenSolver<CMatrix> solver(chi, false);
      eig.assign(solver.eigenvalues().begin(), solver.eigenvalues().end());
    }
    out.push_back({c.cyclic_word.length(), c.norm, std::move(eig)});
  }
  return out;
}

// Sums per-class contributions in class order. Shells are keyed by word
// length; the truncated k-product adds its own geometric remainder.
template <class Term>
TruncatedValue<std::complex<double>> zeta_sum(const FreeFuchsianGroup& g, const ZetaQuery& q, bool derivative,
                                              Term term) {
  check_query(g, q);
  const auto spectra = class_spectra(g, q);
  const double sigma = q.s.real();

  TruncatedValue<std::complex<double>> out;
  std::vector<double> shells(static_cast<std::size_t>(q.max_word_len) + 1, 0.0);
  double k_remainder = 0.0;
  std::int64_t terms = 0;
  for (const ClassSpectrum& c : spectra) {
    std::complex<double> contribution = 0.0;
    int k = 0;
    for (; std::pow(c.norm, -sigma - k) >= q.k_tail_eps; ++k) {
      const std::complex<double> x = std::exp(-(q.s + static_cast<double>(k)) * std::log(c.norm));
      for (const auto& lambda : c.eigenvalues) {
        contribution += term(lambda * x, c.norm);
        ++terms;
      }
    }
    // |log(1 - z)| <= 2|z| and |z / (1 - z)| <= 2|z| for |z| <= 1/2.
    double omitted = 2.0 * static_cast<double>(c.eigenvalues.size()) * std::pow(c.norm, -sigma - k) /
                     (1.0 - 1.0 / c.norm);
    if (derivative) omitted *= std::log(c.norm);
    k_remainder += omitted;
    out.value += contribution;
    shells[c.length] += std::abs(contribution);
  }
  out.cutoff = {"max_word_len", q.max_word_len, terms};
  out.tail_estimate = shell_tail_estimate(shells, g.shell_period()) + k_remainder;
  return out;
}

}  // namespace

TruncatedValue<std::complex<double>> selberg_log_zeta(const FreeFuchsianGroup& g, const ZetaQuery& q) {
  return zeta_sum(g, q, false,
                  [](std::complex<double> z, double) { return std::log(1.0 - z); });
}

TruncatedValue<std::complex<double>> zeta_log_derivative(const FreeFuchsianGroup& g, const ZetaQuery& q) {
  return zeta_sum(g, q, true,
                  [](std::complex<double> z, double n) { return z * std::log(n) / (1.0 - z); });
}

DetHeuristic det_laplacian_heuristic(const FreeFuchsianGroup& g, const ZetaQuery& q) {
  DetHeuristic out;
  out.epsilons = {0.1, 0.05, 0.025};
  for (double eps : out.epsilons) {
    ZetaQuery shifted = q;
    shifted.s = 1.0 + eps;
    const auto log_z = selberg_log_zeta(g, shifted).value;
    out.ratios.push_back(std::exp(log_z.real()) / eps);
  }
  const double r1a = 2.0 * out.ratios[1] - out.ratios[0];
  const double r1b = 2.0 * out.ratios[2] - out.ratios[1];
  out.extrapolated = (4.0 * r1b - r1a) / 3.0;
  return out;
}

CMatrix cusp_constant_T(const CuspWeights& c) {
  const int k = c.rank();
  std::vector<double> alpha;
  for (const auto& b : c.blocks) alpha.insert(alpha.end(), b.mult, b.alpha.value());
  CMatrix t = CMatrix::Zero(k * k, k * k);
  for (int p = 0; p < k; ++p) {
    for (int q = 0; q < k; ++q) {
      const double beta = alpha[p] - alpha[q];
      const double sgn = beta >= 0.0 ? 1.0 : -1.0;
      t(p * k + q, p * k + q) = std::complex<double>(0.0, -sgn * (0.5 - std::abs(beta)));
    }
  }
  return t;
}

CMatrix conjugated_cusp_constant(const CuspFrame& frame, const CuspWeights& c) {
  const CMatrix w = AdjointRep::of(frame.unitary);
  return w * cusp_constant_T(c) * w.adjoint();
}

CMatrix cusp_constant_series(const AdjointRep& ad, const FreeFuchsianGroup& g, int cusp_index, double y,
                             std::int64_t terms) {
  g.check_cusp_index(cusp_index);
  if (!(y >= 10.0)) throw std::invalid_argument("cusp_constant_series: y must be >= 10");
  if (terms < 10000) throw std::invalid_argument("cusp_constant_series: at least 10^4 terms are required");
  const CMatrix p = ad.evaluate(g.cusp_words[cusp_index - 1]);
  const auto n = p.rows();
  const std::complex<double> two_iy(0.0, 2.0 * y);

  CMatrix power = CMatrix::Identity(n, n);
  CMatrix next(n, n);
  CMatrix sum = CMatrix::Zero(n, n);
  for (std::int64_t m = 1; m <= terms; ++m) {
    next.noalias() = power * p;
    power.swap(next);
    const double md = static_cast<double>(m);
    const std::complex<double> plus = 1.0 / (md + two_iy) - 1.0 / md;
    const std::complex<double> minus = 1.0 / (-md + two_iy) + 1.0 / md;
    // P^-m = (P^m)^* for unitary P.
    sum += plus * power + minus * power.adjoint();
  }
  return sum / (2.0 * std::numbers::pi);
}

}  // namespace pmod
