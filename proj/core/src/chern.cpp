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

#include "pmod/chern.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pmod {

std::string LevelKey::to_string() const { return std::to_string(cusp) + "." + std::to_string(level); }

double DefectExpansion::coefficient(int cusp, int level) const {
  const auto it = terms.find({cusp, level});
  return it == terms.end() ? 0.0 : it->second;
}

DefectExpansion defect_coefficients(const ParabolicData& d) {
  validate(d);
  DefectExpansion out;
  const double scale = -2.0 / std::numbers::pi;
  for (std::size_t i = 0; i < d.cusps.size(); ++i) {
    const auto& blocks = d.cusps[i].blocks;
    out.levels.push_back(static_cast<int>(blocks.size()));
    for (std::size_t l = 0; l < blocks.size(); ++l) {
      double sum = 0.0;
      for (const WeightBlock& m : blocks) {
        const double diff = blocks[l].alpha.value() - m.alpha.value();
        const double sgn = diff >= 0.0 ? 1.0 : -1.0;
        sum += sgn * (1.0 - 2.0 * std::abs(diff)) * m.mult;
      }
      out.terms[{static_cast<int>(i) + 1, static_cast<int>(l) + 1}] = scale * sum;
    }
  }
  return out;
}

DefectExpansion reduce_by_trace_relation(const DefectExpansion& e, EliminatedLevel which) {
  DefectExpansion out{e.basis, e.levels, {}};
  for (std::size_t i = 0; i < e.levels.size(); ++i) {
    const int cusp = static_cast<int>(i) + 1;
    const int r = e.levels[i];
    const int removed = which == EliminatedLevel::last ? r : 1;
    const double c_removed = e.coefficient(cusp, removed);
    for (int l = 1; l <= r; ++l) {
      if (l == removed) continue;
      const double c = e.coefficient(cusp, l) - c_removed;
      if (c != 0.0) out.terms[{cusp, l}] = c;
    }
  }
  return out;
}

namespace {

DefectExpansion rescale(const DefectExpansion& e, DefectBasis from, DefectBasis to, double factor) {
  if (e.basis != from) throw std::invalid_argument("defect expansion is not in the expected basis");
  DefectExpansion out{to, e.levels, {}};
  for (const auto& [key, c] : e.terms) out.terms[key] = c * factor;
  return out;
}

}  // namespace

DefectExpansion defect_as_chern(const DefectExpansion& e) {
  return rescale(e, DefectBasis::omega, DefectBasis::chern, std::numbers::pi / 2.0);
}

DefectExpansion chern_as_defect(const DefectExpansion& e) {
  return rescale(e, DefectBasis::chern, DefectBasis::omega, 2.0 / std::numbers::pi);
}

ChernLedger torus_ledger() { return {{{"lambda_0", -2}, {"lambda_1.2", -1}}}; }

double volume_from_chern(double alpha) {
  if (!(alpha > 0.0 && alpha < 0.5)) throw std::invalid_argument("volume_from_chern: alpha must lie in (0, 1/2)");
  const ChernLedger ledger = torus_ledger();
  const double delta_coefficient = -2.0 * (1.0 - 4.0 * alpha);
  const double delta_degree = delta_coefficient * ledger.entries.at("lambda_1.2");
  const double lambda0_degree = ledger.entries.at("lambda_0");
  return std::numbers::pi * std::numbers::pi / 2.0 * (delta_degree - lambda0_degree);
}

TorusDefectSign torus_defect_sign(const Weight& alpha, double tol) {
  if (!(alpha.value() > 0.0 && alpha.value() < 0.5)) {
    throw std::invalid_argument("torus_defect_sign: alpha must lie in (0, 1/2)");
  }
  const Weight beta = alpha.is_exact() ? Weight::exact(Rational(1) - *alpha.rational())
                                       : Weight::approximate(1.0 - alpha.value());
  const ParabolicData d = make_parabolic_data(1, 2, -1, {make_cusp_weights({{alpha, 1}, {beta, 1}})});
  const DefectExpansion reduced = reduce_by_trace_relation(defect_coefficients(d), EliminatedLevel::first);

  TorusDefectSign out;
  out.alpha = alpha.value();
  out.literal = reduced.coefficient(1, 2);
  out.reference = -4.0 / std::numbers::pi * (1.0 - 4.0 * alpha.value()) + 0.0;
  out.magnitudes_agree = std::abs(std::abs(out.literal) - std::abs(out.reference)) <= tol;
  out.signs_agree = (out.literal >= 0.0) == (out.reference >= 0.0);
  return out;
}

}  // namespace pmod
