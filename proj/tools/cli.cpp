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

#include "cli.hpp"

#include <cmath>
#include <complex>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "acceptance.hpp"
#include "pmod/chern.hpp"
#include "pmod/group.hpp"
#include "pmod/io.hpp"
#include "pmod/parabolic.hpp"
#include "pmod/reps.hpp"
#include "pmod/spectral.hpp"
#include "pmod/witten.hpp"

namespace pmod::cli {

namespace {

using json = nlohmann::ordered_json;

json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json complex_json(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

json matrix_json(const CMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json cutoff_json(const Cutoff& c) { return {{"parameter", c.parameter}, {"value", c.value}, {"terms", c.terms}}; }

std::vector<double> parse_numbers(const std::string& text, std::size_t min_count, std::size_t max_count,
                                  const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double x = 0.0;
    try {
      x = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || item.find_first_not_of(" \t", used) != std::string::npos) {
      throw std::invalid_argument("cannot parse " + what + " component \"" + item + "\"");
    }
    out.push_back(x);
  }
  if (out.size() < min_count || out.size() > max_count) throw std::invalid_argument("malformed " + what + ": " + text);
  return out;
}

std::complex<double> parse_complex(const std::string& text, const std::string& what) {
  const auto v = parse_numbers(text, 1, 2, what);
  return {v[0], v.size() > 1 ? v[1] : 0.0};
}

void warn_inexact(const Weight& w, json& warnings) {
  if (!w.is_exact()) {
    warnings.push_back("weight " + w.to_string() + " was given as a decimal; use \"p/q\" for exact arithmetic");
  }
}

void warn_inexact(const ParabolicData& d, json& warnings) {
  for (const CuspWeights& c : d.cusps) {
    for (const WeightBlock& b : c.blocks) warn_inexact(b.alpha, warnings);
  }
}

UnitaryRep rep_from_spec(const std::string& spec, const FreeFuchsianGroup& g) {
  if (spec == "trivial") return trivial_rep(g.rank());
  if (spec.rfind("trivial:", 0) == 0) {
    return trivial_rep(g.rank(), static_cast<int>(parse_numbers(spec.substr(8), 1, 1, "rank")[0]));
  }
  if (spec.rfind("ad:", 0) == 0) return adjoint(rep_from_spec(spec.substr(3), g)).as_unitary();
  if (spec.rfind("su2:", 0) == 0) {
    const std::string rest = spec.substr(4);
    if (rest.rfind("alpha=", 0) != 0) throw std::invalid_argument("expected su2:alpha=<p/q>");
    if (g.rank() != 2) throw std::invalid_argument("su2 shorthand needs a rank-2 group");
    return fricke_su2(Weight::parse(rest.substr(6)).value());
  }
  return parse_rep(read_text_file(spec));
}

// Parabolic data from --data, or from --genus/--rank/--degree/--cusps.
struct DataOptions {
  std::string file;
  int genus = 0;
  int rank = 1;
  int degree = 0;
  std::string cusps;

  void add_to(CLI::App* app) {
    app->add_option("--data", file, "Parabolic data JSON file");
    app->add_option("--genus", genus, "Genus g");
    app->add_option("--rank", rank, "Rank k");
    app->add_option("--degree", degree, "Degree of the bundle");
    app->add_option("--cusps", cusps, "JSON list of {\"weights\": [[alpha, mult], ...]}");
  }

  ParabolicData load() const {
    if (!file.empty()) return parse_parabolic_data(read_text_file(file));
    if (cusps.empty()) throw std::invalid_argument("either --data or --cusps is required");
    return make_parabolic_data(genus, rank, degree, parse_cusps(cusps));
  }
};

void render_table(const json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) render_table(value, prefix.empty() ? key : prefix + "." + key, out);
  } else if (j.is_array() && !j.empty() && (j[0].is_object() || j[0].is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) render_table(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << "\t" << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

json defect_json(const DefectExpansion& e) {
  json coeffs = json::object();
  for (const auto& [key, c] : e.terms) coeffs[key.to_string()] = c;
  return {{"basis", e.basis == DefectBasis::omega ? "Omega" : "c1(lambda)"}, {"coefficients", coeffs}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Parabolic moduli toolkit", "pmod"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));

  json result;
  json warnings = json::array();
  int status = kExitOk;
  std::function<void()> action;

  // dim
  DataOptions dim_opts;
  auto* dim = app.add_subcommand("dim", "Moduli dimensions d and d0");
  dim_opts.add_to(dim);
  dim->callback([&] {
    action = [&] {
      const ParabolicData d = dim_opts.load();
      warn_inexact(d, warnings);
      const ModuliDims m = moduli_dims(d);
      result = {{"d", m.d}, {"d0", m.d0 ? json(*m.d0) : json(nullptr)}};
    };
  });

  // degree
  DataOptions deg_opts;
  auto* degree = app.add_subcommand("degree", "Parabolic degree and integrality");
  deg_opts.add_to(degree);
  degree->callback([&] {
    action = [&] {
      const ParabolicData d = deg_opts.load();
      warn_inexact(d, warnings);
      result = {{"parabolic_degree", parabolic_degree(d)},
                {"integral", is_integral(d)},
                {"continuous_multiplicity", continuous_multiplicity(d)}};
    };
  });

  // defect
  DataOptions defect_opts;
  bool reduce = false;
  bool as_chern = false;
  auto* defect = app.add_subcommand("defect", "Cuspidal defect coefficients");
  defect_opts.add_to(defect);
  defect->add_flag("--reduce", reduce, "Eliminate the last level at each cusp");
  defect->add_flag("--as-chern", as_chern, "Express in c1(lambda_il) instead of Omega_il");
  defect->callback([&] {
    action = [&] {
      const ParabolicData d = defect_opts.load();
      warn_inexact(d, warnings);
      DefectExpansion e = defect_coefficients(d);
      if (reduce) e = reduce_by_trace_relation(e);
      if (as_chern) e = defect_as_chern(e);
      result = defect_json(e);
    };
  });

  // volume
  int vol_genus = 0;
  std::vector<std::string> vol_alphas;
  bool exact_only = false;
  WittenOptions wopts;
  auto* volume = app.add_subcommand("volume", "Rank-2 symplectic volume");
  volume->add_option("--genus", vol_genus, "Genus g")->required();
  volume->add_option("--alphas", vol_alphas, "Comma-separated weights in (0, 1/2)")->required()->delimiter(',');
  volume->add_flag("--exact-only", exact_only, "Skip the numeric series");
  volume->add_option("--terms", wopts.terms, "Direct summation cutoff (p >= 2)");
  volume->add_option("--abel-radius", wopts.abel_radius, "Abel summation radius (p = 1)");
  volume->add_option("--abel-terms", wopts.abel_terms, "Abel summation cutoff (p = 1)");
  volume->callback([&] {
    action = [&] {
      std::vector<double> alphas;
      for (const std::string& a : vol_alphas) {
        const Weight w = Weight::parse(a);
        warn_inexact(w, warnings);
        alphas.push_back(w.value());
      }
      wopts.exact_only = exact_only;
      const WittenVolume v = witten_volume(vol_genus, alphas, wopts);
      result = {{"p", v.p}, {"exact", v.exact ? json(*v.exact) : json(nullptr)}};
      if (v.numeric) {
        result["numeric"] = {{"value", v.numeric->value},
                             {"tail_estimate", finite_or_null(v.numeric->tail_estimate)},
                             {"cutoff", cutoff_json(v.numeric->cutoff)}};
      }
    };
  });

  // volume-from-chern
  std::string vfc_alpha;
  auto* vfc = app.add_subcommand("volume-from-chern", "Pointed-torus volume from the Chern ledger");
  vfc->add_option("--alpha", vfc_alpha, "Weight in (0, 1/2)")->required();
  vfc->callback([&] {
    action = [&] {
      const Weight w = Weight::parse(vfc_alpha);
      warn_inexact(w, warnings);
      const TorusDefectSign sign = torus_defect_sign(w);
      result = {{"volume", volume_from_chern(w.value())},
                {"ledger", torus_ledger().entries},
                {"defect_sign", {{"literal_omega_1.2", sign.literal},
                                 {"reference_omega_1.2", sign.reference},
                                 {"signs_agree", sign.signs_agree}}}};
    };
  });

  // zeta
  std::string zeta_group = std::string(kPuncturedTorusName);
  std::string zeta_rep = "trivial";
  std::string zeta_s;
  int zeta_len = 0;
  double zeta_eps = 1e-15;
  bool zeta_derivative = false;
  bool zeta_det = false;
  auto* zeta = app.add_subcommand("zeta", "Truncated Selberg zeta function");
  zeta->add_option("--group", zeta_group, "Group name or JSON file");
  zeta->add_option("--rep", zeta_rep, "trivial | trivial:k | su2:alpha=p/q | ad:<spec> | rep JSON file");
  zeta->add_option("--s", zeta_s, "s as re[,im], Re s > 1")->required();
  zeta->add_option("--max-word-len", zeta_len, "Longest class word")->required();
  zeta->add_option("--eps", zeta_eps, "Cutoff for the k-product terms N^(-Re s - k)");
  zeta->add_flag("--derivative", zeta_derivative, "Also report d/ds log Z");
  zeta->add_flag("--det-heuristic", zeta_det, "Also report the HEURISTIC det Delta extrapolation");
  zeta->callback([&] {
    action = [&] {
      const FreeFuchsianGroup g = load_group(zeta_group);
      const ZetaQuery q{parse_complex(zeta_s, "s"), rep_from_spec(zeta_rep, g), zeta_len, zeta_eps};
      const auto v = selberg_log_zeta(g, q);
      result = {{"log_Z", v.value.real()},
                {"log_Z_imag", v.value.imag()},
                {"tail_estimate", finite_or_null(v.tail_estimate)},
                {"cutoff", cutoff_json(v.cutoff)}};
      if (zeta_derivative) {
        const auto d = zeta_log_derivative(g, q);
        result["log_derivative"] = {{"value", complex_json(d.value)},
                                    {"tail_estimate", finite_or_null(d.tail_estimate)}};
      }
      if (zeta_det) {
        const DetHeuristic h = det_laplacian_heuristic(g, q);
        result["det_laplacian"] = {{"label", "HEURISTIC"},
                                   {"epsilons", h.epsilons},
                                   {"ratios", h.ratios},
                                   {"extrapolated", h.extrapolated}};
      }
    };
  });

  // eisenstein
  std::string eis_group = std::string(kPuncturedTorusName);
  std::string eis_rep = "su2:alpha=3/10";
  int eis_cusp = 1;
  int eis_v = 0;
  std::string eis_z;
  std::string eis_s = "2";
  int eis_len = 6;
  double eis_tol = kSvdTol;
  double eis_h = 1e-3;
  bool eis_residual = false;
  auto* eis = app.add_subcommand("eisenstein", "Eisenstein-Maass partial sum");
  eis->add_option("--group", eis_group, "Group name or JSON file");
  eis->add_option("--rep", eis_rep, "Base representation rho; the series uses Ad rho");
  eis->add_option("--cusp", eis_cusp, "1-based cusp index");
  eis->add_option("--v", eis_v, "0-based index into the traceless basis of V_i");
  eis->add_option("--z", eis_z, "Point as re,im")->required();
  eis->add_option("--s", eis_s, "s as re[,im], Re s > 1");
  eis->add_option("--coset-len", eis_len, "Longest coset representative word");
  eis->add_option("--svd-tol", eis_tol, "Singular-value and membership tolerance");
  eis->add_option("--step", eis_h, "Finite-difference step for --residual");
  eis->add_flag("--residual", eis_residual, "Also report the eigen-equation residual");
  eis->callback([&] {
    action = [&] {
      const FreeFuchsianGroup g = load_group(eis_group);
      const AdjointRep ad(rep_from_spec(eis_rep, g));
      const CuspInvariantSpace space = invariant_cusp_space(ad, g, eis_cusp, eis_tol);
      if (eis_v < 0 || eis_v >= static_cast<int>(space.traceless_basis.size())) {
        throw std::out_of_range("--v must lie in [0, " + std::to_string(space.traceless_basis.size()) + ")");
      }
      const std::complex<double> s = parse_complex(eis_s, "s");
      const std::complex<double> z = parse_complex(eis_z, "z");
      const EisensteinSeries e(g, ad, eis_cusp, space.traceless_basis[static_cast<std::size_t>(eis_v)], s, eis_len,
                               eis_tol);
      const auto v = e(z);
      result = {{"value", matrix_json(v.value)},
                {"tail_estimate", finite_or_null(v.tail_estimate)},
                {"cutoff", cutoff_json(v.cutoff)}};
      if (eis_residual) {
        result["laplace_residual"] =
            laplace_eigen_residual([&](std::complex<double> w) { return e.value(w); }, z, s, eis_h);
      }
    };
  });

  // rep-check
  std::string rc_group = std::string(kPuncturedTorusName);
  std::string rc_rep;
  DataOptions rc_data;
  double rc_tol = 1e-8;
  double rc_svd = kSvdTol;
  auto* rep_check = app.add_subcommand("rep-check", "Admissibility and irreducibility of a representation");
  rep_check->add_option("--group", rc_group, "Group name or JSON file");
  rep_check->add_option("--rep", rc_rep, "Representation spec")->required();
  rc_data.add_to(rep_check);
  rep_check->add_option("--tol", rc_tol, "Eigenvalue matching tolerance");
  rep_check->add_option("--svd-tol", rc_svd, "Singular-value tolerance for the commutant");
  rep_check->callback([&] {
    action = [&] {
      const FreeFuchsianGroup g = load_group(rc_group);
      const UnitaryRep rho = rep_from_spec(rc_rep, g);
      const ParabolicData d = rc_data.load();
      warn_inexact(d, warnings);
      const AdmissibilityReport report = check_admissible(rho, g, d, rc_tol);
      const Irreducibility irr = irreducibility(rho, g, rc_svd);
      json cusps = json::array();
      for (const CuspAdmissibility& c : report.cusps) {
        json eig = json::array();
        for (const auto& z : c.eigenvalues) eig.push_back(complex_json(z));
        cusps.push_back({{"cusp", c.cusp}, {"pass", c.pass}, {"eigenvalues", eig}, {"max_residual", c.max_residual}});
      }
      result = {{"admissible", report.admissible},
                {"cusps", cusps},
                {"irreducible", irr.irreducible},
                {"commutant_dim", irr.commutant_dim}};
    };
  });

  // rep-construct
  std::string rcon_alpha;
  auto* rep_construct = app.add_subcommand("rep-construct", "Admissible SU(2) representation of the pointed torus");
  rep_construct->add_option("--alpha", rcon_alpha, "Weight in (0, 1/2)")->required();
  rep_construct->callback([&] {
    action = [&] {
      const Weight w = Weight::parse(rcon_alpha);
      warn_inexact(w, warnings);
      const UnitaryRep rho = fricke_su2(w.value());
      json images = json::array();
      for (const CMatrix& m : rho.images()) images.push_back(matrix_json(m));
      result = {{"rank", rho.rank()}, {"images", images}};
    };
  });

  // classes
  std::string cls_group = std::string(kPuncturedTorusName);
  int cls_len = 1;
  auto* classes = app.add_subcommand("classes", "Hyperbolic conjugacy classes up to a word length");
  classes->add_option("--group", cls_group, "Group name or JSON file");
  classes->add_option("--max-len", cls_len, "Longest cyclic word")->required();
  classes->callback([&] {
    action = [&] {
      const FreeFuchsianGroup g = load_group(cls_group);
      json list = json::array();
      for (const ConjClass& c : primitive_classes(g, cls_len)) {
        list.push_back({{"word", c.cyclic_word.to_string(g.names)},
                        {"length", c.cyclic_word.length()},
                        {"norm", c.norm},
                        {"abs_trace", std::abs(c.representative.trace())},
                        {"primitive", c.primitive}});
      }
      result = {{"count", list.size()}, {"classes", list}};
    };
  });

  // selftest
  int only = 0;
  bool timings = false;
  auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");
  selftest->add_option("--only", only, "Run a single criterion")->check(CLI::Range(1, acceptance::kCriterionCount));
  selftest->add_flag("--timings", timings, "Include wall-clock timings");
  selftest->callback([&] {
    action = [&] {
      std::vector<acceptance::CriterionResult> results;
      if (only > 0) {
        results.push_back(acceptance::run_criterion(only));
      } else {
        results = acceptance::run_all();
      }
      json list = json::array();
      bool all = true;
      for (const auto& r : results) {
        all = all && r.pass;
        json item = {{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}};
        if (timings) item["seconds"] = r.seconds;
        list.push_back(item);
        err << acceptance::format_line(r) << "\n";
      }
      result = {{"pass", all}, {"criteria", list}};
      if (!all) status = kExitInternal;
    };
  });

  std::vector<std::string> argv_storage{"pmod"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    out << json{{"error", e.what()}}.dump() << "\n";
    return kExitInvalid;
  }

  try {
    action();
  } catch (const std::invalid_argument& e) {
    out << json{{"error", e.what()}}.dump() << "\n";
    return kExitInvalid;
  } catch (const std::domain_error& e) {
    out << json{{"error", e.what()}}.dump() << "\n";
    return kExitInvalid;
  } catch (const std::out_of_range& e) {
    out << json{{"error", e.what()}}.dump() << "\n";
    return kExitInvalid;
  } catch (const nlohmann::json::exception& e) {
    out << json{{"error", e.what()}}.dump() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    out << json{{"error", std::string("internal error: ") + e.what()}}.dump() << "\n";
    return kExitInternal;
  }

  if (!warnings.empty()) result["warnings"] = warnings;
  if (format == "table") {
    render_table(result, "", out);
  } else {
    out << result.dump(2) << "\n";
  }
  return status;
}

}  // namespace pmod::cli
