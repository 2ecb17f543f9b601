// Copyright (c) the gjacobi contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef GJACOBI_IO_HPP
#define GJACOBI_IO_HPP

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gjacobi/darboux.hpp"
#include "gjacobi/diagnostics.hpp"
#include "gjacobi/measures.hpp"
#include "gjacobi/pade.hpp"
#include "gjacobi/spectral.hpp"

namespace gjacobi {

/// Shortest round-trippable decimal form; all emitters use it so identical
/// inputs produce byte-identical files.
std::string format_double(double v);

// CSV emitters, exactly the declared column layouts.
std::string factorization_csv(const ShiftedFactorization& f);     // j,d,v,eps
std::string transform_csv(const GSymmetricTridiagonal& t);        // j,diag,sup,sub,g
std::string pole_table_csv(
    const std::vector<std::pair<int, PoleClassification>>& rows); // n,re,im,class
std::string error_table_csv(const std::vector<ApproxErrorEntry>& rows);

// JSON forms.
nlohmann::ordered_json to_json(const SpectrumReport& r);
nlohmann::ordered_json to_json(const PoleSweepResult& r);
nlohmann::ordered_json to_json(const DiagnosticsReport& r);  // schema "v1"

/// Measure definition file: { "name": str, "a": [...], "b": [...],
/// "tail": "repeat" }. The tail convention repeats the last supplied pair.
MeasureSpec measure_from_json(const nlohmann::json& j);

/// "chebyshev" or a path to a measure definition file.
MeasureSpec load_measure(const std::string& selector_or_path);

}  // namespace gjacobi

#endif  // GJACOBI_IO_HPP
