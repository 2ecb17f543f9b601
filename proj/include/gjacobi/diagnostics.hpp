// Copyright (c) the gjacobi contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef GJACOBI_DIAGNOSTICS_HPP
#define GJACOBI_DIAGNOSTICS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "gjacobi/darboux.hpp"
#include "gjacobi/measures.hpp"
#include "gjacobi/prec.hpp"

namespace gjacobi {

/// Running sup of the pivot magnitudes |d_j|, j < limit. Boundedness of this
/// sup is the decidable surrogate for definitizability; a breakdown ends the
/// sweep early and is recorded with the partial data rather than thrown.
struct BcondReport {
  double x = 0.0;
  int limit = 0;
  double sup_d = 0.0;
  int argmax_j = 0;
  std::vector<std::pair<int, double>> checkpoints;  // (j, d_j) at decades
  bool breakdown = false;
  int breakdown_index = -1;
};

/// Uses the extended-precision sweep automatically when limit > 10^4.
BcondReport bcond_sup(const MeasureSpec& m, double x, int limit);
BcondReport bcond_sup(const MeasureSpec& m, double x, int limit, Precision prec);

/// Partial sums S_K = sum_{k<K} 1/sqrt(|sub_k * sup_k|) at each checkpoint:
/// the Carleman series of the symmetrized off-diagonals. Divergence is the
/// self-adjointness evidence.
std::vector<double> carleman_sums(const GSymmetricTridiagonal& T,
                                  const std::vector<int>& checkpoints);

/// Minimum over seeded random finitely supported vectors of the normalized
/// Krein quadratic form [(Jt - xI)v, v]_G / ||v||^2, evaluated both directly
/// and as ||Lv||^2; the two are algebraically identical and their largest
/// normalized discrepancy is reported.
struct NonnegativityReport {
  double min_form = 0.0;
  double max_discrepancy = 0.0;
};

NonnegativityReport nonnegativity_check(const ShiftedFactorization& f, int trials,
                                        std::uint64_t seed);

/// Scan statistics of {j alpha mod 1}, j = 1..limit: running min |cos(j pi a)|
/// and the fill distance (largest gap between consecutive sorted fractional
/// parts, boundary gaps included).
struct KroneckerStats {
  double min_abs_cos = 0.0;
  double fill_distance = 0.0;
};

KroneckerStats kronecker_stats(double alpha, int limit);

enum class Verdict { definitizable_evidence, non_definitizable_evidence, inconclusive };

const char* to_string(Verdict v);

/// Everything the verdict heuristic looked at, so the call is auditable.
/// kronecker_min_cos is NaN when |x| >= 1 (no alpha with x = cos(pi alpha)).
struct DiagnosticsReport {
  double x = 0.0;
  int limit = 0;
  double sup_d = 0.0;
  int argmax_j = 0;
  double sup_d_early = 0.0;  // sup over the first limit/10 pivots
  std::vector<std::pair<int, double>> carleman;  // (K, S_K) at decades
  double min_quadratic_form = 0.0;
  double kronecker_min_cos = 0.0;
  Verdict verdict = Verdict::inconclusive;
  bool breakdown = false;
  int breakdown_index = -1;
};

/// Heuristic verdict: definitizable-evidence when sup|d_j| grew < 1% between
/// limit/10 and limit and stays under bound_threshold; non-definitizable
/// evidence when it at least doubled; inconclusive otherwise. Evidence, not
/// proof: the true criterion is a sup over all j, undecidable from a prefix.
/// Pure function of its numeric inputs (same seed => identical report).
DiagnosticsReport diagnose(const MeasureSpec& m, double x, int limit,
                           double bound_threshold = 1e3,
                           std::uint64_t seed = 0x5EEDBA5EULL);

}  // namespace gjacobi

#endif  // GJACOBI_DIAGNOSTICS_HPP
