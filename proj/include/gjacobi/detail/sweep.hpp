// Copyright (c) the gjacobi contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef GJACOBI_DETAIL_SWEEP_HPP
#define GJACOBI_DETAIL_SWEEP_HPP

#include <cmath>
#include <vector>

#include "gjacobi/measures.hpp"

namespace gjacobi::detail {

// Breakdown tolerance: 1e-13 of the running matrix scale
// max(|b_j - x|, a_j) seen so far. Shared by both precision paths so the
// existence classification does not depend on the arithmetic used.
inline constexpr double kPivotTolFactor = 1e-13;

template <class Real>
struct SweepResult {
  std::vector<Real> d;  // pivots until breakdown (or n of them)
  std::vector<Real> v;  // multipliers, one fewer than d
  int breakdown = -1;   // pivot index, or -1
};

// d_0 = b_0 - x; v_j = a_j / d_j; d_{j+1} = b_{j+1} - x - d_j v_j^2.
template <class Real>
SweepResult<Real> pivot_sweep(const MeasureSpec& m, double x, int n) {
  SweepResult<Real> r;
  r.d.reserve(n);
  if (n > 0) r.v.reserve(n - 1);
  const Real xr = x;
  double scale = 0.0;
  using std::abs;
  for (int j = 0; j < n; ++j) {
    const RecurrenceCoeff c = m.coeff(j);
    Real dj;
    if (j == 0) {
      dj = Real(c.b) - xr;
    } else {
      const Real& dprev = r.d.back();
      const Real& vprev = r.v.back();
      dj = Real(c.b) - xr - dprev * vprev * vprev;
    }
    scale = std::max(scale, std::abs(c.b - x));
    scale = std::max(scale, c.a);
    if (abs(dj) < Real(kPivotTolFactor * scale)) {
      r.breakdown = j;
      return r;
    }
    r.d.push_back(dj);
    if (j < n - 1) r.v.push_back(Real(c.a) / dj);
  }
  return r;
}

}  // namespace gjacobi::detail

#endif  // GJACOBI_DETAIL_SWEEP_HPP
