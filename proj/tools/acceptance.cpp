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

#include "acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include <Eigen/Dense>

#include "pmod/chern.hpp"
#include "pmod/group.hpp"
#include "pmod/parabolic.hpp"
#include "pmod/reps.hpp"
#include "pmod/spectral.hpp"
#include "pmod/witten.hpp"

namespace pmod::acceptance {

namespace {

constexpr double kPi = std::numbers::pi;

double torus_volume(double alpha) { return 2.0 * kPi * kPi * (1.0 - 2.0 * alpha); }

double rel_err(double x, double ref) { return std::abs(x - ref) / std::max(std::abs(ref), 1e-300); }

std::string sci(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

// Random rational in (0, 1/2) with denominator in [3, 1000].
Rational random_half_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> den(3, 1000);
  const std::int64_t q = den(rng);
  std::uniform_int_distribution<std::int64_t> num(1, (q - 1) / 2);
  return Rational(num(rng), q);
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "FAILED " << what << "; ";
    }
  }
};

Outcome volume_identity(std::mt19937_64&) {
  Outcome out;
  double worst_exact = 0.0;
  double worst_numeric = 0.0;
  for (const Rational alpha : {Rational(1, 10), Rational(1, 4), Rational(2, 5)}) {
    const double a = to_double(alpha);
    const double alphas[] = {a};
    const WittenVolume v = witten_volume(1, alphas);
    const double ref = torus_volume(a);
    worst_exact = std::max(worst_exact, rel_err(*v.exact, ref));
    worst_numeric = std::max(worst_numeric, rel_err(v.numeric->value, ref));
  }
  out.check(worst_exact <= 1e-12, "exact path");
  out.check(worst_numeric <= 1e-4, "Abel-summed numeric path");
  out.detail << "max rel err exact " << sci(worst_exact) << ", numeric " << sci(worst_numeric);
  return out;
}

Outcome chern_cross_derivation(std::mt19937_64& rng) {
  Outcome out;
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double a = to_double(random_half_rational(rng));
    const double alphas[] = {a};
    const WittenOptions exact_only{.exact_only = true};
    worst = std::max(worst, rel_err(volume_from_chern(a), *witten_volume(1, alphas, exact_only).exact));
  }
  out.check(worst <= 1e-12, "volume_from_chern vs Witten");
  out.detail << "20 random rational alpha, max rel err " << sci(worst);
  return out;
}

Outcome defect_magnitude(std::mt19937_64& rng) {
  Outcome out;
  double worst = 0.0;
  int opposite = 0;
  for (int i = 0; i < 20; ++i) {
    const Rational alpha = random_half_rational(rng);
    const double a = to_double(alpha);
    const ParabolicData d = make_parabolic_data(
        1, 2, -1, {make_cusp_weights({{Weight::exact(alpha), 1}, {Weight::exact(Rational(1) - alpha), 1}})});
    const DefectExpansion reduced = reduce_by_trace_relation(defect_coefficients(d));
    if (reduced.terms.size() > 1) out.check(false, "reduced defect has more than one symbol");
    const double magnitude = std::abs(reduced.coefficient(1, 1));
    worst = std::max(worst, std::abs(magnitude - 4.0 / kPi * std::abs(1.0 - 4.0 * a)));
    const TorusDefectSign sign = torus_defect_sign(Weight::exact(alpha));
    if (!sign.signs_agree) ++opposite;
  }
  out.check(worst <= 1e-12, "defect magnitude");
  out.detail << "max abs err " << sci(worst) << "; sign on Omega_1.2: literal opposite to displayed value for "
             << opposite << "/20 alpha";
  return out;
}

Outcome dimension_formulas(std::mt19937_64& rng) {
  Outcome out;
  const auto full_flag = [] {
    return make_cusp_weights({{Weight::exact(Rational(1, 4)), 1}, {Weight::exact(Rational(3, 4)), 1}});
  };
  const ModuliDims torus = moduli_dims(make_parabolic_data(1, 2, -1, {full_flag()}), true);
  const ModuliDims genus2 = moduli_dims(make_parabolic_data(2, 2, -1, {full_flag()}), true);
  out.check(torus.d == 2 && torus.d0 == 1, "g=1 dimensions");
  out.check(genus2.d == 6 && genus2.d0 == 4, "g=2 dimensions");

  int mismatches = 0;
  std::uniform_int_distribution<int> rank_dist(1, 6);
  std::uniform_int_distribution<int> cusp_dist(1, 4);
  for (int trial = 0; trial < 1000; ++trial) {
    const int k = rank_dist(rng);
    const int n = cusp_dist(rng);
    std::vector<CuspWeights> cusps;
    for (int i = 0; i < n; ++i) {
      // Random composition of k into levels with distinct increasing weights.
      std::vector<int> mults;
      int left = k;
      while (left > 0) {
        std::uniform_int_distribution<int> part(1, left);
        mults.push_back(part(rng));
        left -= mults.back();
      }
      std::vector<WeightBlock> blocks;
      const std::int64_t den = static_cast<std::int64_t>(mults.size()) + 1;
      for (std::size_t l = 0; l < mults.size(); ++l) {
        blocks.push_back({Weight::exact(Rational(static_cast<std::int64_t>(l), den)), mults[l]});
      }
      cusps.push_back(make_cusp_weights(std::move(blocks)));
    }
    const ParabolicData d = make_parabolic_data(1, k, 0, cusps);
    int direct = 0;
    int via_flags = n * k * k;
    for (const CuspWeights& c : cusps) {
      for (const WeightBlock& b : c.blocks) direct += b.mult * b.mult;
      via_flags -= flag_dims(c, k).dim_r;
    }
    if (direct != via_flags || continuous_multiplicity(d) != direct) ++mismatches;
  }
  out.check(mismatches == 0, "continuous multiplicity identity");
  out.detail << "d=" << torus.d << ",d0=" << *torus.d0 << " (g=1); d=" << genus2.d << ",d0=" << *genus2.d0
             << " (g=2); multiplicity mismatches " << mismatches << "/1000";
  return out;
}

// Greedy multiset match of complex values; returns the largest matched distance.
double match_multisets(std::vector<std::complex<double>> a, std::vector<std::complex<double>> b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (const auto& x : a) {
    auto best = std::min_element(b.begin(), b.end(),
                                 [&](const auto& p, const auto& q) { return std::abs(p - x) < std::abs(q - x); });
    worst = std::max(worst, std::abs(*best - x));
    b.erase(best);
  }
  return worst;
}

Outcome cusp_series_oracle(std::mt19937_64&) {
  Outcome out;
  const FreeFuchsianGroup g = punctured_torus_group();
  double worst_entry = 0.0;
  double worst_spectrum = 0.0;
  for (double a : {0.2, 0.3, 0.45}) {
    const UnitaryRep rho = fricke_su2(a);
    const AdjointRep ad(rho);
    const CuspWeights w = make_cusp_weights({{Weight::approximate(a), 1}, {Weight::approximate(1.0 - a), 1}});
    const CMatrix series = cusp_constant_series(ad, g, 1, 200.0, 1'000'000);
    const CMatrix closed = conjugated_cusp_constant(cusp_frame(rho, g, 1, w), w);
    worst_entry = std::max(worst_entry, (series - closed).cwiseAbs().maxCoeff());

    const Eigen::ComplexEigenSolver<CMatrix> solver(series, false);
    const CMatrix t = cusp_constant_T(w);
    std::vector<std::complex<double>> eig(solver.eigenvalues().begin(), solver.eigenvalues().end());
    std::vector<std::complex<double>> diag(t.diagonal().begin(), t.diagonal().end());
    worst_spectrum = std::max(worst_spectrum, match_multisets(eig, diag));
  }
  out.check(worst_entry <= 5e-3, "entrywise match");
  out.check(worst_spectrum <= 5e-3, "spectrum match");
  out.detail << "max entry diff " << sci(worst_entry) << ", max eigenvalue diff " << sci(worst_spectrum);
  return out;
}

GroupWord random_word(std::mt19937_64& rng, int rank, int min_len, int max_len) {
  std::uniform_int_distribution<int> len_dist(min_len, max_len);
  std::uniform_int_distribution<int> gen_dist(0, rank - 1);
  std::uniform_int_distribution<int> sign_dist(0, 1);
  const int len = len_dist(rng);
  std::vector<Letter> letters;
  while (static_cast<int>(letters.size()) < len) {
    const Letter x{gen_dist(rng), sign_dist(rng) == 0 ? 1 : -1};
    if (!letters.empty() && letters.back().cancels(x)) continue;
    letters.push_back(x);
  }
  return GroupWord(std::move(letters));
}

Outcome eisenstein_identities(std::mt19937_64& rng) {
  Outcome out;
  const FreeFuchsianGroup g = punctured_torus_group();
  const UnitaryRep rho = fricke_su2(0.3);
  const AdjointRep ad(rho);
  const CMatrix v = invariant_cusp_space(ad, g, 1).traceless_basis.at(0);
  const EisensteinSeries e(g, ad, 1, v, 2.0, 8);

  const std::complex<double> z(0.3, 1.5);
  const auto ez = e(z);
  double worst_ratio = 0.0;
  for (int i = 0; i < 5; ++i) {
    const GroupWord w = random_word(rng, g.rank(), 1, 3);
    const auto egz = e(g.evaluate(w).apply(z));
    const double residual = (egz.value - AdjointRep::act(rho.evaluate(w), ez.value)).norm();
    const double bound = 10.0 * (ez.tail_estimate + egz.tail_estimate);
    out.check(std::isfinite(bound), "finite tail estimates");
    worst_ratio = std::max(worst_ratio, residual / bound);
  }
  out.check(worst_ratio <= 1.0, "automorphy residual within 10x tails");

  double worst_lap = 0.0;
  const auto fn = [&](std::complex<double> w) { return e.value(w); };
  for (const std::complex<double> p : {std::complex<double>(0.3, 1.5), std::complex<double>(-0.2, 1.2),
                                       std::complex<double>(0.45, 2.0)}) {
    worst_lap = std::max(worst_lap, laplace_eigen_residual(fn, p, 2.0));
  }
  out.check(worst_lap <= 1e-3, "eigen-equation residual");

  const auto ys = [](std::complex<double> w) { return CMatrix::Constant(1, 1, std::pow(w.imag(), 2.0)); };
  const double exact_residual = laplace_eigen_residual(ys, z, 2.0, 1e-3);
  out.check(exact_residual <= 1e-5, "y^s stencil test");
  out.detail << "automorphy residual/bound max " << sci(worst_ratio) << ", eigen residual max " << sci(worst_lap)
             << ", y^s residual " << sci(exact_residual);
  return out;
}

Outcome selberg_zeta(std::mt19937_64&) {
  Outcome out;
  const FreeFuchsianGroup g = punctured_torus_group();
  std::vector<double> log_z(13, 0.0);
  double worst_imag = 0.0;
  bool positive = true;
  for (int len = 4; len <= 12; ++len) {
    const auto v = selberg_log_zeta(g, {2.0, trivial_rep(g.rank()), len});
    log_z[static_cast<std::size_t>(len)] = v.value.real();
    worst_imag = std::max(worst_imag, std::abs(v.value.imag()));
    positive = positive && std::isfinite(v.value.real()) && std::exp(v.value.real()) > 0.0;
  }
  out.check(worst_imag <= 1e-10, "log Z real");
  out.check(positive, "Z positive");

  std::vector<double> diffs;
  for (int len = 4; len <= 10; len += 2) {
    diffs.push_back(std::abs(log_z[static_cast<std::size_t>(len)] - log_z[static_cast<std::size_t>(len + 2)]));
  }
  bool decreasing = true;
  for (std::size_t i = 1; i < diffs.size(); ++i) decreasing = decreasing && diffs[i] < diffs[i - 1];
  out.check(decreasing, "|log Z(L) - log Z(L+2)| strictly decreasing");

  double worst_fd = 0.0;
  for (int len : {4, 8, 10}) {
    const ZetaQuery q{2.0, trivial_rep(g.rank()), len};
    const auto d = zeta_log_derivative(g, q).value;
    ZetaQuery up = q;
    ZetaQuery down = q;
    up.s += 1e-5;
    down.s -= 1e-5;
    const auto fd = (selberg_log_zeta(g, up).value - selberg_log_zeta(g, down).value) / 2e-5;
    worst_fd = std::max(worst_fd, std::abs(d - fd) / std::abs(d));
  }
  out.check(worst_fd <= 1e-7, "derivative vs finite difference");
  out.detail << "|dlogZ| for L=4,6,8,10: ";
  for (double d : diffs) out.detail << sci(d) << " ";
  out.detail << "; max |Im log Z| " << sci(worst_imag) << "; derivative rel err " << sci(worst_fd);
  return out;
}

Outcome group_machinery(std::mt19937_64& rng) {
  Outcome out;
  const FreeFuchsianGroup torus = punctured_torus_group();
  int count_failures = 0;
  for (int rank = 2; rank <= 3; ++rank) {
    FreeFuchsianGroup g;
    for (int i = 0; i < rank; ++i) g.generators.push_back(MoebiusMap(1.0, 1.0 + i, 1.0, 2.0 + i));
    for (int len = 0; len <= 6; ++len) {
      std::uint64_t formula = 1;
      std::uint64_t shell = 2 * static_cast<std::uint64_t>(rank);
      for (int l = 1; l <= len; ++l) {
        formula += shell;
        shell *= 2 * static_cast<std::uint64_t>(rank) - 1;
      }
      std::uint64_t visited = 0;
      for_each_word(g, len, [&](const GroupWord&, const MoebiusMap&) { ++visited; });
      if (visited != formula || reduced_word_count(rank, len) != formula) ++count_failures;
    }
  }
  out.check(count_failures == 0, "word counts");

  int conj_failures = 0;
  for (int i = 0; i < 500; ++i) {
    const GroupWord w = random_word(rng, torus.rank(), 1, 8);
    const GroupWord h = random_word(rng, torus.rank(), 0, 3);
    if (canonical_cyclic_word(w) != canonical_cyclic_word(h * w * h.inverse())) ++conj_failures;
  }
  out.check(conj_failures == 0, "conjugacy canonicalization");

  // Fricke identity and a direct product, both insensitive to the sign of each lift.
  const auto raw = [](const MoebiusMap& m) { return Eigen::Matrix2d{{m.a(), m.b()}, {m.c(), m.d()}}; };
  const Eigen::Matrix2d a = raw(torus.generators[0]);
  const Eigen::Matrix2d b = raw(torus.generators[1]);
  const double ta = a.trace();
  const double tb = b.trace();
  const double tab = (a * b).trace();
  const double fricke = ta * ta + tb * tb + tab * tab - ta * tb * tab - 2.0;
  const double direct = (a * b * a.inverse() * b.inverse()).trace();
  out.check(std::abs(fricke + 2.0) <= 1e-12 && std::abs(direct + 2.0) <= 1e-12, "commutator trace -2");
  out.detail << "word-count failures " << count_failures << ", conjugacy failures " << conj_failures
             << "/500, tr[A,B] Fricke " << fricke << " direct " << direct;
  return out;
}

struct CriterionDef {
  const char* name;
  double budget;
  Outcome (*run)(std::mt19937_64&);
};

const CriterionDef kCriteria[kCriterionCount] = {
    {"pointed-torus volume identity", 5.0, volume_identity},
    {"Chern ledger cross-derivation", 1.0, chern_cross_derivation},
    {"defect magnitude", 1.0, defect_magnitude},
    {"dimension formulas", 1.0, dimension_formulas},
    {"cusp constant series oracle", 60.0, cusp_series_oracle},
    {"Eisenstein identities", 120.0, eisenstein_identities},
    {"Selberg zeta convergence", 120.0, selberg_zeta},
    {"group machinery", 10.0, group_machinery},
};

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
  if (id < 1 || id > kCriterionCount) throw std::out_of_range("acceptance criterion id out of range");
  const CriterionDef& spec = kCriteria[id - 1];
  std::mt19937_64 rng(seed + static_cast<std::uint64_t>(id));
  CriterionResult r{id, spec.name, false, 0.0, spec.budget, {}};
  const auto start = std::chrono::steady_clock::now();
  try {
    Outcome o = spec.run(rng);
    r.pass = o.pass;
    r.detail = o.detail.str();
  } catch (const std::exception& e) {
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.seconds > r.budget_seconds) {
    r.pass = false;
    r.detail += "; runtime budget exceeded";
  }
  return r;
}

std::vector<CriterionResult> run_all(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, seed));
  return out;
}

std::string format_line(const CriterionResult& r) {
  std::ostringstream os;
  os.precision(2);
  os << (r.pass ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << " (" << std::fixed << r.seconds << " s / "
     << r.budget_seconds << " s): " << r.detail;
  return os.str();
}

}  // namespace pmod::acceptance
