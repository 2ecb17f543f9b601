// Copyright (c) the gjacobi contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: shifted Darboux transforms, pole sweeps, Pade
// tables, definitizability diagnostics and the Stahl demonstration, emitted
// as flat CSV/JSON files. Exit codes: 0 success, 2 factorization breakdown,
// 3 invalid configuration, 1 other library errors.

#include <cmath>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gjacobi/diagnostics.hpp"
#include "gjacobi/errors.hpp"
#include "gjacobi/io.hpp"
#include "gjacobi/jacobi.hpp"
#include "gjacobi/pade.hpp"
#include "gjacobi/spectral.hpp"

namespace {

using namespace gjacobi;
using nlohmann::ordered_json;

struct CommonOpts {
  std::string measure = "chebyshev";
  std::vector<double> shifts;
  std::optional<double> alpha;
  std::string precision;
  std::string output;
  std::uint64_t seed = 1;
};

void add_measure_opts(CLI::App* cmd, CommonOpts* o, bool with_shifts) {
  cmd->add_option("--measure", o->measure,
                  "\"chebyshev\" or path to a JSON measure file (tail repeats)");
  if (with_shifts) {
    cmd->add_option("--shift", o->shifts, "shift point x (repeatable for chains)");
    cmd->add_option("--alpha", o->alpha, "use the single shift x = cos(pi*alpha)");
  }
  cmd->add_option("--precision", o->precision, "standard|extended")
      ->check(CLI::IsMember({"standard", "extended"}));
  cmd->add_option("-o,--output", o->output, "output path (or prefix)");
  cmd->add_option("--seed", o->seed, "PRNG seed for randomized checks");
}

Precision resolve_precision(const CommonOpts& o) {
  std::string p = o.precision;
  if (p.empty()) {
    if (const char* env = std::getenv("SPECTRAL_PRECISION")) p = env;
  }
  if (p == "extended") return Precision::extended;
  if (p.empty() || p == "standard") return Precision::standard;
  throw InvalidArgument("SPECTRAL_PRECISION must be standard or extended");
}

std::vector<double> resolve_shifts(const CommonOpts& o) {
  if (o.alpha.has_value() && !o.shifts.empty())
    throw InvalidArgument("supply exactly one of --shift / --alpha");
  if (o.alpha.has_value()) return {std::cos(M_PI * *o.alpha)};
  if (o.shifts.empty())
    throw InvalidArgument("supply exactly one of --shift / --alpha");
  return o.shifts;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << content;
}

void emit(const CommonOpts& o, const std::string& suffix, const std::string& content) {
  if (o.output.empty()) {
    std::cout << content;
  } else {
    write_file(o.output + suffix, content);
  }
}

std::vector<int> parse_n_list(const std::string& spec) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < spec.size()) {
    std::size_t next = spec.find(',', pos);
    if (next == std::string::npos) next = spec.size();
    const std::string tok = spec.substr(pos, next - pos);
    // a:b:step ranges, plain integers otherwise
    const std::size_t c1 = tok.find(':');
    if (c1 != std::string::npos) {
      const std::size_t c2 = tok.find(':', c1 + 1);
      const int a = std::stoi(tok.substr(0, c1));
      const int b = std::stoi(tok.substr(c1 + 1, c2 - c1 - 1));
      const int st = c2 == std::string::npos ? 1 : std::stoi(tok.substr(c2 + 1));
      if (st < 1 || b < a) throw InvalidArgument("bad order range: " + tok);
      for (int n = a; n <= b; n += st) out.push_back(n);
    } else {
      out.push_back(std::stoi(tok));
    }
    pos = next + 1;
  }
  if (out.empty()) throw InvalidArgument("empty order list");
  return out;
}

int run_quad(const CommonOpts& o, int n) {
  const QuadratureRule rule = gauss_quadrature(load_measure(o.measure), n);
  std::string csv = "i,node,weight\n";
  for (int i = 0; i < n; ++i) {
    csv += std::to_string(i) + ',' + format_double(rule.nodes[i]) + ',' +
           format_double(rule.weights[i]) + '\n';
  }
  emit(o, ".quad.csv", csv);
  return 0;
}

int run_transform(const CommonOpts& o, int n) {
  const std::vector<double> shifts = resolve_shifts(o);
  if (shifts.size() != 1)
    throw InvalidArgument("transform takes a single shift; use spectrum/pade for chains");
  const ShiftedFactorization f =
      factorize(load_measure(o.measure), shifts[0], n, resolve_precision(o));
  const GSymmetricTridiagonal t = darboux_transform(f);
  if (o.output.empty()) {
    std::cout << factorization_csv(f) << '\n' << transform_csv(t);
  } else {
    write_file(o.output + ".factor.csv", factorization_csv(f));
    write_file(o.output + ".darboux.csv", transform_csv(t));
  }
  std::cerr << "usable rows: " << n - 1 << " of " << n
            << " (last transform row is a truncation edge)\n";
  return 0;
}

int run_spectrum(const CommonOpts& o, const std::string& n_spec) {
  const SignedMeasureSpec s(load_measure(o.measure), resolve_shifts(o));
  const PoleSweepResult sweep = pole_sweep(s, parse_n_list(n_spec));
  emit(o, ".spectrum.json", to_json(sweep).dump(2) + "\n");
  return 0;
}

int run_pade(const CommonOpts& o, const std::string& n_spec, double tol,
             const std::vector<std::string>& probe_specs) {
  const SignedMeasureSpec s(load_measure(o.measure), resolve_shifts(o));
  const std::vector<int> orders = parse_n_list(n_spec);

  std::vector<std::pair<int, PoleClassification>> pole_rows;
  for (int n : orders) {
    pole_rows.emplace_back(n, classify_spurious(diagonal_pade(s, n), tol));
  }

  std::vector<cdouble> probes;
  for (const std::string& ps : probe_specs) {
    const std::size_t comma = ps.find(',');
    if (comma == std::string::npos) {
      probes.emplace_back(std::stod(ps), 0.0);
    } else {
      probes.emplace_back(std::stod(ps.substr(0, comma)),
                          std::stod(ps.substr(comma + 1)));
    }
  }
  if (probes.empty()) probes = {{2.0, 0.0}, {0.0, 2.0}};

  const std::vector<ApproxErrorEntry> table = approximation_error(s, orders, probes);
  if (o.output.empty()) {
    std::cout << pole_table_csv(pole_rows) << '\n' << error_table_csv(table);
  } else {
    write_file(o.output + ".poles.csv", pole_table_csv(pole_rows));
    write_file(o.output + ".errors.csv", error_table_csv(table));
  }
  return 0;
}

int run_diagnose(const CommonOpts& o, int limit, double bound_threshold) {
  const std::vector<double> shifts = resolve_shifts(o);
  if (shifts.size() != 1) throw InvalidArgument("diagnose takes a single shift");
  const DiagnosticsReport rep =
      diagnose(load_measure(o.measure), shifts[0], limit, bound_threshold, o.seed);
  emit(o, ".diagnose.json", to_json(rep).dump(2) + "\n");
  return 0;
}

int run_stahl_demo(const CommonOpts& o, int n_max, int limit) {
  const double alpha = (std::sqrt(5.0) - 1.0) / 2.0;
  const double x_stahl = std::cos(M_PI * alpha);
  const MeasureSpec cheb = chebyshev_measure();

  ordered_json summary;
  summary["alpha"] = alpha;
  summary["x_stahl"] = x_stahl;

  // pivot growth, both precision paths
  const BcondReport std_sweep = bcond_sup(cheb, x_stahl, limit, Precision::standard);
  const BcondReport ext_sweep = bcond_sup(cheb, x_stahl, limit, Precision::extended);
  summary["stahl"]["sup_d"] = std_sweep.sup_d;
  summary["stahl"]["argmax_j"] = std_sweep.argmax_j;
  summary["stahl"]["argmax_agrees_extended"] = std_sweep.argmax_j == ext_sweep.argmax_j;

  const DiagnosticsReport stahl_diag = diagnose(cheb, x_stahl, limit, 1e3, o.seed);
  summary["stahl"]["diagnostics"] = to_json(stahl_diag);

  const KroneckerStats ks = kronecker_stats(alpha, 1000);
  summary["stahl"]["kronecker"] = {{"min_abs_cos", ks.min_abs_cos},
                                   {"fill_distance", ks.fill_distance}};

  // Carleman partial sums S_100 and S_limit
  {
    const GSymmetricTridiagonal t =
        darboux_transform(factorize(cheb, x_stahl, limit + 2));
    const std::vector<double> sums = carleman_sums(t, {100, limit});
    summary["stahl"]["carleman"] = {{"S_100", sums[0]},
                                    {"S_" + std::to_string(limit), sums[1]}};
  }

  // pole sweep and spurious classification
  const SignedMeasureSpec stahl_s(cheb, {x_stahl});
  std::vector<int> orders;
  for (int n = 10; n <= n_max; n += 10) orders.push_back(n);
  const PoleSweepResult sweep = pole_sweep(stahl_s, orders);
  double max_abs = 0.0, max_spurious_re = 0.0;
  int spurious_total = 0;
  for (const SpectrumReport& r : sweep.reports) {
    max_abs = std::max(max_abs, r.max_abs);
    spurious_total += r.outside_count;
    for (const cdouble& z : r.eigs) {
      if (support_distance(z) > kSupportTol)
        max_spurious_re = std::max(max_spurious_re, std::abs(z.real()));
    }
  }
  summary["stahl"]["pole_sweep"] = {{"orders", orders},
                                    {"max_abs", max_abs},
                                    {"spurious_count", spurious_total},
                                    {"max_spurious_abs_re", max_spurious_re}};

  // bounded contrast at x = -1.5
  const double x_b = -1.5;
  summary["bounded"]["x"] = x_b;
  const DiagnosticsReport bdiag = diagnose(cheb, x_b, limit, 1e3, o.seed);
  summary["bounded"]["diagnostics"] = to_json(bdiag);
  const SignedMeasureSpec bounded_s(cheb, {x_b});
  std::vector<int> borders;
  for (int n = 10; n <= 100; n += 10) borders.push_back(n);
  double bmax_dist = 0.0;
  for (const SpectrumReport& r : pole_sweep(bounded_s, borders).reports) {
    for (const cdouble& z : r.eigs) bmax_dist = std::max(bmax_dist, support_distance(z));
  }
  summary["bounded"]["pole_sweep"] = {{"orders", borders},
                                      {"max_support_distance", bmax_dist}};

  const std::string text = summary.dump(2) + "\n";
  if (o.output.empty()) {
    std::cout << text;
  } else {
    write_file(o.output + ".stahl-demo.json", text);
  }
  std::cerr << "stahl verdict: " << to_string(stahl_diag.verdict)
            << ", bounded verdict: " << to_string(bdiag.verdict) << '\n';
  return 0;
}

void error_json(const std::string& kind, const std::string& message,
                const ordered_json& extra = ordered_json::object()) {
  ordered_json e = extra;
  e["error"] = kind;
  e["message"] = message;
  std::cerr << e.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"G-symmetric tridiagonal transforms, Pade poles and diagnostics"};
  app.require_subcommand(1);

  CommonOpts quad_o, tr_o, sp_o, pd_o, dg_o, demo_o;
  int quad_n = 10, tr_n = 50, dg_limit = 10000, demo_nmax = 300, demo_limit = 10000;
  std::string sp_nlist = "10:100:10", pd_nlist = "1:20";
  double pd_tol = gjacobi::kSupportTol, dg_bound = 1e3;
  std::vector<std::string> pd_probes;

  CLI::App* quad_cmd = app.add_subcommand("quad", "Gauss quadrature rule (CSV)");
  add_measure_opts(quad_cmd, &quad_o, false);
  quad_cmd->add_option("--n", quad_n, "rule size")->required();

  CLI::App* tr_cmd =
      app.add_subcommand("transform", "factorize + Darboux transform (CSV dumps)");
  add_measure_opts(tr_cmd, &tr_o, true);
  tr_cmd->add_option("--n", tr_n, "truncation order")->required();

  CLI::App* sp_cmd = app.add_subcommand("spectrum", "pole sweep over orders (JSON)");
  add_measure_opts(sp_cmd, &sp_o, true);
  sp_cmd->add_option("--n-list", sp_nlist, "orders, e.g. 10,20,50 or 10:300:10");

  CLI::App* pd_cmd =
      app.add_subcommand("pade", "Pade poles, spurious classes, error table (CSV)");
  add_measure_opts(pd_cmd, &pd_o, true);
  pd_cmd->add_option("--n-list", pd_nlist, "orders, e.g. 1:20");
  pd_cmd->add_option("--tol", pd_tol, "support-distance tolerance for spurious class");
  pd_cmd->add_option("--probe", pd_probes, "probe point re[,im] (repeatable)");

  CLI::App* dg_cmd =
      app.add_subcommand("diagnose", "boundedness/definitizability verdict (JSON)");
  add_measure_opts(dg_cmd, &dg_o, true);
  dg_cmd->add_option("--N", dg_limit, "number of pivots to sweep");
  dg_cmd->add_option("--bound-threshold", dg_bound, "sup|d_j| bound for the verdict");

  CLI::App* demo_cmd = app.add_subcommand(
      "stahl-demo", "golden-mean Stahl pipeline plus the bounded contrast (JSON)");
  add_measure_opts(demo_cmd, &demo_o, false);
  demo_cmd->add_option("--n-max", demo_nmax, "largest pole-sweep order");
  demo_cmd->add_option("--N", demo_limit, "pivot sweep length");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    error_json("InvalidConfig", e.what());
    return 3;
  }

  try {
    if (quad_cmd->parsed()) return run_quad(quad_o, quad_n);
    if (tr_cmd->parsed()) return run_transform(tr_o, tr_n);
    if (sp_cmd->parsed()) return run_spectrum(sp_o, sp_nlist);
    if (pd_cmd->parsed()) return run_pade(pd_o, pd_nlist, pd_tol, pd_probes);
    if (dg_cmd->parsed()) return run_diagnose(dg_o, dg_limit, dg_bound);
    if (demo_cmd->parsed()) return run_stahl_demo(demo_o, demo_nmax, demo_limit);
  } catch (const Breakdown& e) {
    error_json("Breakdown", e.what(),
               {{"pivot_index", e.pivot_index}, {"shift_index", e.shift_index}});
    return 2;
  } catch (const InvalidArgument& e) {
    error_json("InvalidConfig", e.what());
    return 3;
  } catch (const Error& e) {
    error_json("Error", e.what());
    return 1;
  } catch (const std::exception& e) {
    error_json("Error", e.what());
    return 1;
  }
  return 0;
}
