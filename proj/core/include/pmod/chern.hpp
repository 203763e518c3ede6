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

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "pmod/parabolic.hpp"

namespace pmod {

/// A basis symbol Omega_il (or c1(lambda_il)): 1-based cusp and weight level.
struct LevelKey {
  int cusp = 1;
  int level = 1;

  auto operator<=>(const LevelKey&) const = default;
  /// "cusp.level", e.g. "1.2".
  std::string to_string() const;
};

enum class DefectBasis { omega, chern };

/**
 * A formal real combination of the symbols Omega_il, or of c1(lambda_il)
 * when basis == chern. levels[i] is the number of weight levels at cusp i+1.
 */
struct DefectExpansion {
  DefectBasis basis = DefectBasis::omega;
  std::vector<int> levels;
  std::map<LevelKey, double> terms;

  double coefficient(int cusp, int level) const;
};

/**
 * Literal evaluation of the cuspidal defect,
 *   c_il = -(2/pi) sum_m sgn(a_l - a_m) (1 - 2|a_l - a_m|) k_m,
 * with sgn(0) = 1, so the diagonal term contributes k_l.
 */
DefectExpansion defect_coefficients(const ParabolicData& d);

enum class EliminatedLevel { first, last };

/**
 * Applies the relation sum_l Omega_il = 0 at every cusp to remove one level
 * symbol: removing level j maps c_l to c_l - c_j. Idempotent. A single-level
 * cusp reduces to zero.
 */
DefectExpansion reduce_by_trace_relation(const DefectExpansion& e,
                                         EliminatedLevel which = EliminatedLevel::last);

/// Rewrites Omega_il = (pi/2) c1(lambda_il): every coefficient is divided by 2/pi.
DefectExpansion defect_as_chern(const DefectExpansion& e);
/// Inverse of defect_as_chern.
DefectExpansion chern_as_defect(const DefectExpansion& e);

/// Degrees of line bundles over the moduli space, keyed by symbol ("lambda_0", "lambda_1.2").
struct ChernLedger {
  std::map<std::string, int> entries;
};

/// The pointed-torus ledger: lambda_0 has degree -2 and lambda_1.2 degree -1.
ChernLedger torus_ledger();

/**
 * Symplectic volume of the pointed-torus moduli space from the Chern ledger:
 * solves -2 = -(2/pi^2) Vol + deg(delta) with delta = -2(1 - 4 alpha) c1(lambda_1.2),
 * giving 2 pi^2 (1 - 2 alpha). Throws std::invalid_argument unless 0 < alpha < 1/2.
 */
double volume_from_chern(double alpha);

/**
 * Sign comparison for the rank-2 pointed torus with weights (alpha, 1 - alpha).
 * literal is the coefficient of Omega_1.2 obtained from defect_coefficients by
 * eliminating level 1; reference is the displayed value -(4/pi)(1 - 4 alpha).
 */
struct TorusDefectSign {
  double alpha = 0.0;
  double literal = 0.0;
  double reference = 0.0;
  bool magnitudes_agree = false;
  bool signs_agree = false;
};

TorusDefectSign torus_defect_sign(const Weight& alpha, double tol = 1e-12);

}  // namespace pmod
