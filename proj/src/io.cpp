// Copyright (c) the gjacobi contributors.
// SPDX-License-Identifier: Apache-2.0

#include "gjacobi/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "gjacobi/errors.hpp"

namespace gjacobi {

std::string format_double(double v) {
  char buf[40];
  for (int prec = 15; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

std::string factorization_csv(const ShiftedFactorization& f) {
  std::ostringstream os;
  os << "j,d,v,eps\n";
  for (int j = 0; j < f.order(); ++j) {
    os << j << ',' << format_double(f.d[j]) << ',';
    if (j < f.order() - 1) os << format_double(f.v[j]);
    os << ',' << f.eps[j] << '\n';
  }
  return os.str();
}

std::string transform_csv(const GSymmetricTridiagonal& t) {
  std::ostringstream os;
  os << "j,diag,sup,sub,g\n";
  for (int j = 0; j < t.order(); ++j) {
    os << j << ',' << format_double(t.diag[j]) << ',';
    if (j < t.order() - 1) os << format_double(t.sup[j]);
    os << ',';
    if (j < t.order() - 1) os << format_double(t.sub[j]);
    os << ',' << t.g[j] << '\n';
  }
  return os.str();
}

std::string pole_table_csv(
    const std::vector<std::pair<int, PoleClassification>>& rows) {
  std::ostringstream os;
  os << "n,re,im,class\n";
  for (const auto& [n, cls] : rows) {
    for (const cdouble& z : cls.support_poles) {
      os << n << ',' << format_double(z.real()) << ',' << format_double(z.imag())
         << ",support\n";
    }
    for (const cdouble& z : cls.spurious_poles) {
      os << n << ',' << format_double(z.real()) << ',' << format_double(z.imag())
         << ",spurious\n";
    }
  }
  return os.str();
}

std::string error_table_csv(const std::vector<ApproxErrorEntry>& rows) {
  std::ostringstream os;
  os << "n,probe_re,probe_im,abs_err,near_pole_flag\n";
  for (const ApproxErrorEntry& r : rows) {
    os << r.n << ',' << format_double(r.probe.real()) << ','
       << format_double(r.probe.imag()) << ',' << format_double(r.abs_err) << ','
       << (r.near_pole ? 1 : 0) << '\n';
  }
  return os.str();
}

nlohmann::ordered_json to_json(const SpectrumReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  auto eigs = nlohmann::ordered_json::array();
  for (const cdouble& z : r.eigs) eigs.push_back({z.real(), z.imag()});
  j["eigs"] = std::move(eigs);
  j["max_abs"] = r.max_abs;
  j["outside"] = r.outside_count;
  return j;
}

nlohmann::ordered_json to_json(const PoleSweepResult& r) {
  nlohmann::ordered_json j;
  auto reports = nlohmann::ordered_json::array();
  for (const SpectrumReport& rep : r.reports) reports.push_back(to_json(rep));
  j["reports"] = std::move(reports);
  auto failures = nlohmann::ordered_json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"n", f.n},
                        {"shift_index", f.shift_index},
                        {"pivot_index", f.pivot_index}});
  }
  j["failures"] = std::move(failures);
  return j;
}

nlohmann::ordered_json to_json(const DiagnosticsReport& r) {
  nlohmann::ordered_json j;
  j["schema"] = "v1";
  j["x"] = r.x;
  j["N"] = r.limit;
  j["sup_d"] = r.sup_d;
  j["argmax_j"] = r.argmax_j;
  j["sup_d_early"] = r.sup_d_early;
  auto carleman = nlohmann::ordered_json::array();
  for (const auto& [k, s] : r.carleman) carleman.push_back({k, s});
  j["carleman_sums"] = std::move(carleman);
  j["min_quadratic_form"] = r.min_quadratic_form;
  if (std::isnan(r.kronecker_min_cos)) {
    j["kronecker_min_cos"] = nullptr;
  } else {
    j["kronecker_min_cos"] = r.kronecker_min_cos;
  }
  j["verdict"] = to_string(r.verdict);
  j["breakdown"] = r.breakdown;
  j["breakdown_index"] = r.breakdown_index;
  return j;
}

MeasureSpec measure_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidArgument("measure definition must be a JSON object");
  if (!j.contains("a") || !j.contains("b"))
    throw InvalidArgument("measure definition needs \"a\" and \"b\" arrays");
  try {
    const std::string name = j.value("name", "custom");
    std::vector<double> a = j.at("a").get<std::vector<double>>();
    std::vector<double> b = j.at("b").get<std::vector<double>>();
    const std::string tail = j.value("tail", "repeat");
    if (tail != "repeat")
      throw InvalidArgument("unsupported tail convention \"" + tail + "\"");
    return custom_measure(std::move(a), std::move(b), name);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("bad measure definition: ") + e.what());
  }
}

MeasureSpec load_measure(const std::string& selector_or_path) {
  if (selector_or_path == "chebyshev") return chebyshev_measure();
  std::ifstream in(selector_or_path);
  if (!in) throw InvalidArgument("cannot open measure file: " + selector_or_path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument("bad measure file " + selector_or_path + ": " + e.what());
  }
  return measure_from_json(j);
}

}  // namespace gjacobi
